#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "gaugekit/error.hpp"

namespace gaugekit {

/// Chart identifiers. `Flat` is the single chart of a flat region; `North`
/// and `South` are the two stereographic charts of the sphere.
enum class Chart { Flat, North, South };

std::string_view to_string(Chart chart);
Chart chart_from_string(std::string_view name);

struct ChartPoint {
  Chart chart = Chart::Flat;
  Eigen::Vector2d coords = Eigen::Vector2d::Zero();

  bool operator==(const ChartPoint& o) const { return chart == o.chart && coords == o.coords; }
};

/// Coordinate change between charts. North <-> South is x -> x / |x|^2 (the
/// azimuth is shared); Flat only maps to itself. Throws PathOutsideAtlas when
/// the point has no image (a pole, or mixing flat and sphere charts).
Eigen::Vector2d chart_transition(Chart from, Chart to, const Eigen::Vector2d& x);
Eigen::Matrix2d chart_transition_jacobian(Chart from, Chart to, const Eigen::Vector2d& x);
ChartPoint to_chart(const ChartPoint& p, Chart target);

/// Euclidean distance in the chart of `a` (falling back to the chart of `b`
/// when `b` has no image there). Infinite for incompatible charts.
double chart_distance(const ChartPoint& a, const ChartPoint& b);

/// How consecutive samples are joined. `Linear` segments are straight in chart
/// coordinates; `Polar` segments interpolate radius and azimuth linearly, which
/// reproduces circles about the chart origin exactly.
enum class Interpolation { Linear, Polar };

std::string_view to_string(Interpolation interp);
Interpolation interpolation_from_string(std::string_view name);

/// Geometry of one path segment in a single chart, for tau in [0, 1].
class PathSegment {
 public:
  PathSegment(Chart chart, const Eigen::Vector2d& start, const Eigen::Vector2d& end, bool polar);

  Chart chart() const { return chart_; }
  Eigen::Vector2d point(double tau) const;
  /// d/dtau of point(tau).
  Eigen::Vector2d velocity(double tau) const;
  double length() const;

 private:
  Chart chart_;
  Eigen::Vector2d start_;
  Eigen::Vector2d end_;
  bool polar_;
  double r0_ = 0, dr_ = 0, phi0_ = 0, dphi_ = 0;
};

/// Oriented sampled path on a base manifold, an element of the path groupoid.
///
/// Segment k joins samples k and k+1. Its geometry lives in the chart of
/// sample k when both samples share a chart and in the North chart otherwise,
/// so a segment is the same curve whichever way it is traversed.
class Path {
 public:
  explicit Path(std::vector<ChartPoint> samples, Interpolation interp = Interpolation::Linear);
  Path(std::vector<ChartPoint> samples, std::vector<double> params, Interpolation interp = Interpolation::Linear);

  const std::vector<ChartPoint>& samples() const { return samples_; }
  const std::vector<double>& params() const { return params_; }
  Interpolation interpolation() const { return interp_; }
  std::size_t size() const { return samples_.size(); }
  std::size_t segment_count() const { return samples_.size() - 1; }

  const ChartPoint& initial() const { return samples_.front(); }
  const ChartPoint& final() const { return samples_.back(); }

  /// Chart the geometry of segment k is expressed in.
  Chart segment_chart(std::size_t k) const;
  PathSegment segment(std::size_t k) const;
  Eigen::Vector2d segment_point(std::size_t k, double tau) const { return segment(k).point(tau); }
  double segment_length(std::size_t k) const { return segment(k).length(); }
  double length() const;

  bool is_closed(double tol = 1e-9) const;

 private:
  std::vector<ChartPoint> samples_;
  std::vector<double> params_;
  Interpolation interp_;
};

inline constexpr double kDegenerateLength = 1e-12;
inline constexpr double kEndpointTolerance = 1e-9;
inline constexpr int kKeySamples = 64;
inline constexpr double kKeyResolution = 1e-6;

/// Resamples to `n` points equally spaced in cumulative length. Endpoints are
/// kept exactly. Throws DegeneratePath for total length below 1e-12.
Path path_normalize(const Path& p, int n);
Path path_reverse(const Path& p);
/// `first` followed by `second`. Throws EndpointMismatch unless the final
/// point of `first` is within 1e-9 of the initial point of `second`.
Path path_compose(const Path& first, const Path& second);
/// Canonical key: 64 normalized samples rounded to 1e-6, plus the chart and
/// interpolation tags. Equal for reparametrizations; orientation-sensitive.
std::string path_key(const Path& p);

/// Orientation-preserving reparametrization by a monotone map f of [0, 1]
/// onto itself (f(0) = 0, f(1) = 1). The result samples the same trace at
/// f(j / (count - 1)) of the normalized length, keeping every original vertex.
Path path_reparametrize(const Path& p, const std::function<double(double)>& f, int count);

/// Straight segment between two points of the same chart.
Path straight_path(const ChartPoint& a, const ChartPoint& b, int samples = 2);

}  // namespace gaugekit
