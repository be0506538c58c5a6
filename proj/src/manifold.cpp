#include "gaugekit/manifold.hpp"

#include <cmath>
#include <numbers>

namespace gaugekit {

Manifold Manifold::flat(const Eigen::Vector2d& lower, const Eigen::Vector2d& upper) {
  if (!(lower.array() < upper.array()).all()) throw Error(ErrorCode::InvalidArgument, "flat region must have positive extent");
  return Manifold(FlatRegion{lower, upper});
}

Manifold Manifold::sphere(double overlap_radius) {
  if (!(overlap_radius > 1)) throw Error(ErrorCode::InvalidArgument, "overlap radius must exceed 1");
  return Manifold(TwoChartSphere{overlap_radius, 1e6});
}

bool Manifold::contains(const ChartPoint& p) const {
  if (!p.coords.allFinite()) return false;
  if (const auto* flat = std::get_if<FlatRegion>(&model_)) {
    return p.chart == Chart::Flat && (p.coords.array() >= flat->lower.array()).all() &&
           (p.coords.array() <= flat->upper.array()).all();
  }
  const auto& s = std::get<TwoChartSphere>(model_);
  return p.chart != Chart::Flat && p.coords.norm() <= s.max_radius;
}

bool Manifold::in_overlap(const ChartPoint& p) const {
  if (kind() != ManifoldKind::TwoChartSphere || !contains(p)) return false;
  const double r = p.coords.norm();
  const double band = sphere_model().overlap_radius;
  return r >= 1 / band && r <= band;
}

void Manifold::validate(const Path& path) const {
  for (const auto& s : path.samples()) {
    if (!contains(s)) throw Error(ErrorCode::PathOutsideAtlas, "path sample outside the base manifold");
  }
  const auto& samples = path.samples();
  for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
    if (samples[k].chart != samples[k + 1].chart && !(in_overlap(samples[k]) && in_overlap(samples[k + 1]))) {
      throw Error(ErrorCode::PathOutsideAtlas, "chart change outside the overlap band");
    }
  }
}

ChartPoint sphere_point(double theta, double phi, Chart chart) {
  if (chart == Chart::Flat) throw Error(ErrorCode::InvalidArgument, "sphere point needs a sphere chart");
  const double r = chart == Chart::North ? std::tan(theta / 2) : 1 / std::tan(theta / 2);
  return {chart, Eigen::Vector2d(r * std::cos(phi), r * std::sin(phi))};
}

std::pair<double, double> spherical_angles(const ChartPoint& p) {
  if (p.chart == Chart::Flat) throw Error(ErrorCode::InvalidArgument, "spherical angles need a sphere chart");
  const double r = p.coords.norm();
  const double phi = std::atan2(p.coords.y(), p.coords.x());
  const double theta = p.chart == Chart::North ? 2 * std::atan(r) : std::numbers::pi - 2 * std::atan(r);
  return {theta, phi};
}

Eigen::Vector3d embed_in_r3(const ChartPoint& p) {
  const double r2 = p.coords.squaredNorm();
  const double s = 1 / (1 + r2);
  const double z = p.chart == Chart::North ? (1 - r2) * s : (r2 - 1) * s;
  return {2 * p.coords.x() * s, 2 * p.coords.y() * s, z};
}

Eigen::Matrix<double, 3, 2> embedding_jacobian(const ChartPoint& p) {
  const double r2 = p.coords.squaredNorm();
  const double s = 1 / (1 + r2);
  Eigen::Matrix<double, 3, 2> j;
  j.topRows<2>() = 2 * s * Eigen::Matrix2d::Identity() - 4 * s * s * p.coords * p.coords.transpose();
  const double sign = p.chart == Chart::North ? -1.0 : 1.0;
  j.row(2) = sign * 4 * s * s * p.coords.transpose();
  return j;
}

Path latitude_loop(double theta, int samples, double phi_start) {
  if (samples < 3) throw Error(ErrorCode::InvalidArgument, "a latitude loop needs at least three samples");
  if (!(theta > 0 && theta < std::numbers::pi)) throw Error(ErrorCode::InvalidArgument, "colatitude must lie in (0, pi)");
  const Chart chart = theta <= std::numbers::pi / 2 ? Chart::North : Chart::South;
  std::vector<ChartPoint> pts;
  for (int j = 0; j < samples; ++j) {
    pts.push_back(sphere_point(theta, phi_start + 2 * std::numbers::pi * j / samples, chart));
  }
  pts.push_back(pts.front());
  return Path(std::move(pts), Interpolation::Polar);
}

}  // namespace gaugekit
