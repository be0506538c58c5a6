#include "gaugekit/paths.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace gaugekit {

namespace {

bool is_sphere(Chart c) { return c == Chart::North || c == Chart::South; }

double wrap_angle(double a) {
  a = std::remainder(a, 2 * std::numbers::pi);
  return a <= -std::numbers::pi ? a + 2 * std::numbers::pi : a;
}

// 16-point Gauss-Legendre on [0, 1].
constexpr std::array<double, 8> kGlNodes = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                            0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                            0.9445750230732326, 0.9894009349916499};
constexpr std::array<double, 8> kGlWeights = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                              0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                              0.0622535239386479, 0.0271524594117541};

template <typename F>
double integrate_unit(F&& f) {
  double sum = 0;
  for (std::size_t i = 0; i < kGlNodes.size(); ++i) {
    sum += kGlWeights[i] * (f(0.5 * (1 - kGlNodes[i])) + f(0.5 * (1 + kGlNodes[i])));
  }
  return 0.5 * sum;
}

}  // namespace

std::string_view to_string(Chart chart) {
  switch (chart) {
    case Chart::Flat: return "flat";
    case Chart::North: return "north";
    case Chart::South: return "south";
  }
  return "flat";
}

Chart chart_from_string(std::string_view name) {
  if (name == "flat") return Chart::Flat;
  if (name == "north") return Chart::North;
  if (name == "south") return Chart::South;
  throw Error(ErrorCode::SchemaViolation, "unknown chart '" + std::string(name) + "'");
}

std::string_view to_string(Interpolation interp) { return interp == Interpolation::Polar ? "polar" : "linear"; }

Interpolation interpolation_from_string(std::string_view name) {
  if (name == "linear") return Interpolation::Linear;
  if (name == "polar") return Interpolation::Polar;
  throw Error(ErrorCode::SchemaViolation, "unknown interpolation '" + std::string(name) + "'");
}

Eigen::Vector2d chart_transition(Chart from, Chart to, const Eigen::Vector2d& x) {
  if (from == to) return x;
  if (!is_sphere(from) || !is_sphere(to)) throw Error(ErrorCode::PathOutsideAtlas, "no transition between flat and sphere charts");
  const double r2 = x.squaredNorm();
  if (!(r2 > 0)) throw Error(ErrorCode::PathOutsideAtlas, "chart origin has no image in the opposite chart");
  return x / r2;
}

Eigen::Matrix2d chart_transition_jacobian(Chart from, Chart to, const Eigen::Vector2d& x) {
  if (from == to) return Eigen::Matrix2d::Identity();
  if (!is_sphere(from) || !is_sphere(to)) throw Error(ErrorCode::PathOutsideAtlas, "no transition between flat and sphere charts");
  const double r2 = x.squaredNorm();
  if (!(r2 > 0)) throw Error(ErrorCode::PathOutsideAtlas, "chart origin has no image in the opposite chart");
  return (Eigen::Matrix2d::Identity() * r2 - 2 * x * x.transpose()) / (r2 * r2);
}

ChartPoint to_chart(const ChartPoint& p, Chart target) { return {target, chart_transition(p.chart, target, p.coords)}; }

double chart_distance(const ChartPoint& a, const ChartPoint& b) {
  if (a.chart == b.chart) return (a.coords - b.coords).norm();
  if (!is_sphere(a.chart) || !is_sphere(b.chart)) return std::numeric_limits<double>::infinity();
  if (b.coords.squaredNorm() > 0) return (a.coords - chart_transition(b.chart, a.chart, b.coords)).norm();
  if (a.coords.squaredNorm() > 0) return (b.coords - chart_transition(a.chart, b.chart, a.coords)).norm();
  return std::numeric_limits<double>::infinity();
}

Path::Path(std::vector<ChartPoint> samples, Interpolation interp) : samples_(std::move(samples)), interp_(interp) {
  if (samples_.size() < 2) throw Error(ErrorCode::InvalidArgument, "a path needs at least two samples");
  params_.resize(samples_.size());
  for (std::size_t k = 0; k < samples_.size(); ++k) params_[k] = double(k) / double(samples_.size() - 1);
  for (const auto& s : samples_) {
    if (!s.coords.allFinite()) throw Error(ErrorCode::InvalidArgument, "non-finite path coordinates");
    if ((s.chart == Chart::Flat) != (samples_.front().chart == Chart::Flat)) {
      throw Error(ErrorCode::PathOutsideAtlas, "path mixes flat and sphere charts");
    }
  }
}

Path::Path(std::vector<ChartPoint> samples, std::vector<double> params, Interpolation interp)
    : Path(std::move(samples), interp) {
  if (params.size() != samples_.size()) throw Error(ErrorCode::InvalidArgument, "one parameter value per sample required");
  for (std::size_t k = 1; k < params.size(); ++k) {
    if (!(params[k] > params[k - 1])) throw Error(ErrorCode::InvalidArgument, "path parameters must increase strictly");
  }
  params_ = std::move(params);
}

Chart Path::segment_chart(std::size_t k) const {
  const Chart a = samples_[k].chart;
  return a == samples_[k + 1].chart ? a : Chart::North;
}

PathSegment::PathSegment(Chart chart, const Eigen::Vector2d& start, const Eigen::Vector2d& end, bool polar)
    : chart_(chart), start_(start), end_(end) {
  r0_ = start.norm();
  const double r1 = end.norm();
  polar_ = polar && r0_ > 1e-14 && r1 > 1e-14;
  if (polar_) {
    dr_ = r1 - r0_;
    phi0_ = std::atan2(start.y(), start.x());
    dphi_ = wrap_angle(std::atan2(end.y(), end.x()) - phi0_);
  }
}

Eigen::Vector2d PathSegment::point(double tau) const {
  if (tau == 0) return start_;
  if (tau == 1) return end_;
  if (!polar_) return start_ + tau * (end_ - start_);
  const double r = r0_ + tau * dr_;
  const double phi = phi0_ + tau * dphi_;
  return {r * std::cos(phi), r * std::sin(phi)};
}

Eigen::Vector2d PathSegment::velocity(double tau) const {
  if (!polar_) return end_ - start_;
  const double r = r0_ + tau * dr_;
  const double phi = phi0_ + tau * dphi_;
  const Eigen::Vector2d radial(std::cos(phi), std::sin(phi));
  const Eigen::Vector2d angular(-std::sin(phi), std::cos(phi));
  return dr_ * radial + r * dphi_ * angular;
}

double PathSegment::length() const {
  if (!polar_) return (end_ - start_).norm();
  if (dr_ == 0) return r0_ * std::abs(dphi_);
  return integrate_unit([&](double tau) { return std::hypot(dr_, (r0_ + tau * dr_) * dphi_); });
}

PathSegment Path::segment(std::size_t k) const {
  const Chart chart = segment_chart(k);
  return PathSegment(chart, chart_transition(samples_[k].chart, chart, samples_[k].coords),
                     chart_transition(samples_[k + 1].chart, chart, samples_[k + 1].coords),
                     interp_ == Interpolation::Polar);
}

double Path::length() const {
  double total = 0;
  for (std::size_t k = 0; k < segment_count(); ++k) total += segment_length(k);
  return total;
}

bool Path::is_closed(double tol) const { return chart_distance(initial(), final()) <= tol; }

namespace {

std::vector<double> cumulative_lengths(const Path& p) {
  std::vector<double> s(p.size(), 0.0);
  for (std::size_t k = 0; k < p.segment_count(); ++k) s[k + 1] = s[k] + p.segment_length(k);
  return s;
}

// Point at cumulative length t, in the chart of the segment containing it.
ChartPoint point_at_length(const Path& p, const std::vector<double>& cum, double t) {
  const std::size_t last = p.segment_count() - 1;
  auto it = std::upper_bound(cum.begin(), cum.end(), t);
  std::size_t k = it == cum.begin() ? 0 : std::size_t(it - cum.begin()) - 1;
  k = std::min(k, last);
  // Skip zero-length segments so tau stays well defined.
  while (k < last && cum[k + 1] - cum[k] <= 0) ++k;
  const double len = cum[k + 1] - cum[k];
  const double tau = len > 0 ? std::clamp((t - cum[k]) / len, 0.0, 1.0) : 0.0;
  return {p.segment_chart(k), p.segment_point(k, tau)};
}

}  // namespace

Path path_normalize(const Path& p, int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "normalization needs at least two samples");
  const auto cum = cumulative_lengths(p);
  const double total = cum.back();
  if (!(total >= kDegenerateLength)) throw Error(ErrorCode::DegeneratePath, "path length below 1e-12");
  std::vector<ChartPoint> out;
  std::vector<double> params;
  out.reserve(std::size_t(n));
  params.reserve(std::size_t(n));
  for (int j = 0; j < n; ++j) {
    const double u = double(j) / double(n - 1);
    if (j == 0) {
      out.push_back(p.initial());
    } else if (j == n - 1) {
      out.push_back(p.final());
    } else {
      out.push_back(point_at_length(p, cum, u * total));
    }
    params.push_back(u);
  }
  return Path(std::move(out), std::move(params), p.interpolation());
}

Path path_reverse(const Path& p) {
  std::vector<ChartPoint> samples(p.samples().rbegin(), p.samples().rend());
  const auto& in = p.params();
  std::vector<double> params(in.size());
  const double span = in.front() + in.back();
  for (std::size_t k = 0; k < in.size(); ++k) params[k] = span - in[in.size() - 1 - k];
  return Path(std::move(samples), std::move(params), p.interpolation());
}

Path path_compose(const Path& first, const Path& second) {
  if (first.interpolation() != second.interpolation()) {
    throw Error(ErrorCode::InvalidArgument, "cannot compose paths with different interpolation");
  }
  if (!(chart_distance(first.final(), second.initial()) <= kEndpointTolerance)) {
    throw Error(ErrorCode::EndpointMismatch, "final point of first path does not meet initial point of second");
  }
  std::vector<ChartPoint> samples = first.samples();
  std::vector<double> params = first.params();
  const double shift = first.params().back() - second.params().front();
  for (std::size_t k = 1; k < second.size(); ++k) {
    samples.push_back(second.samples()[k]);
    params.push_back(second.params()[k] + shift);
  }
  return Path(std::move(samples), std::move(params), first.interpolation());
}

std::string path_key(const Path& p) {
  const Path n = path_normalize(p, kKeySamples);
  std::ostringstream os;
  os << to_string(p.interpolation());
  for (const auto& s : n.samples()) {
    os << ';' << to_string(s.chart)[0] << std::llround(s.coords.x() / kKeyResolution) << ','
       << std::llround(s.coords.y() / kKeyResolution);
  }
  return os.str();
}

Path path_reparametrize(const Path& p, const std::function<double(double)>& f, int count) {
  if (count < 2) throw Error(ErrorCode::InvalidArgument, "reparametrization needs at least two samples");
  const auto cum = cumulative_lengths(p);
  const double total = cum.back();
  if (!(total >= kDegenerateLength)) throw Error(ErrorCode::DegeneratePath, "path length below 1e-12");

  struct Station {
    double s;       // normalized length
    double u;       // new parameter value
    int vertex;     // original sample index, or -1
  };
  std::vector<Station> stations;
  for (int j = 0; j < count; ++j) {
    const double u = double(j) / double(count - 1);
    const int vertex = j == 0 ? 0 : (j == count - 1 ? int(p.size()) - 1 : -1);
    stations.push_back({j == 0 ? 0.0 : (j == count - 1 ? 1.0 : std::clamp(f(u), 0.0, 1.0)), u, vertex});
  }
  const auto inverse = [&](double s) {
    double lo = 0, hi = 1;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) < s ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  for (std::size_t k = 1; k + 1 < p.size(); ++k) {
    stations.push_back({cum[k] / total, inverse(cum[k] / total), int(k)});
  }
  std::sort(stations.begin(), stations.end(), [](const Station& a, const Station& b) {
    if (a.s != b.s) return a.s < b.s;
    return a.vertex > b.vertex;
  });

  std::vector<ChartPoint> samples;
  std::vector<double> params;
  for (const auto& st : stations) {
    if (!params.empty() && !(st.u > params.back())) continue;
    params.push_back(st.u);
    samples.push_back(st.vertex >= 0 ? p.samples()[std::size_t(st.vertex)] : point_at_length(p, cum, st.s * total));
  }
  samples.back() = p.final();
  return Path(std::move(samples), std::move(params), p.interpolation());
}

Path straight_path(const ChartPoint& a, const ChartPoint& b, int samples) {
  if (a.chart != b.chart) throw Error(ErrorCode::InvalidArgument, "straight path endpoints must share a chart");
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "need at least two samples");
  std::vector<ChartPoint> pts;
  for (int j = 0; j < samples; ++j) {
    const double t = double(j) / double(samples - 1);
    pts.push_back({a.chart, a.coords + t * (b.coords - a.coords)});
  }
  pts.back() = b;
  return Path(std::move(pts));
}

}  // namespace gaugekit
