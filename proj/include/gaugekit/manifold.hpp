#pragma once

#include <utility>
#include <variant>

#include <Eigen/Core>

#include "gaugekit/paths.hpp"

namespace gaugekit {

/// A single flat chart over a closed rectangle.
struct FlatRegion {
  Eigen::Vector2d lower{-1e3, -1e3};
  Eigen::Vector2d upper{1e3, 1e3};
};

/// The sphere covered by two stereographic charts. North coordinates are
/// tan(theta/2) (cos phi, sin phi), South coordinates cot(theta/2) (cos phi,
/// sin phi). The overlap band is 1/overlap_radius <= |x| <= overlap_radius.
struct TwoChartSphere {
  double overlap_radius = 1.2;
  /// Points beyond this radius are too close to the far pole to be trusted.
  double max_radius = 1e6;
};

enum class ManifoldKind { FlatChart, TwoChartSphere };

class Manifold {
 public:
  static Manifold flat(const Eigen::Vector2d& lower, const Eigen::Vector2d& upper);
  static Manifold flat() { return Manifold(FlatRegion{}); }
  static Manifold sphere(double overlap_radius = 1.2);

  ManifoldKind kind() const { return std::holds_alternative<FlatRegion>(model_) ? ManifoldKind::FlatChart : ManifoldKind::TwoChartSphere; }
  const FlatRegion& flat_region() const { return std::get<FlatRegion>(model_); }
  const TwoChartSphere& sphere_model() const { return std::get<TwoChartSphere>(model_); }

  bool contains(const ChartPoint& p) const;
  bool in_overlap(const ChartPoint& p) const;
  /// Throws PathOutsideAtlas unless every sample lies in its chart and
  /// every chart change happens inside the overlap band.
  void validate(const Path& path) const;

 private:
  explicit Manifold(std::variant<FlatRegion, TwoChartSphere> m) : model_(m) {}
  std::variant<FlatRegion, TwoChartSphere> model_;
};

/// Sphere point at colatitude theta and azimuth phi in the given chart.
ChartPoint sphere_point(double theta, double phi, Chart chart);
/// (theta, phi) of a sphere chart point; phi in (-pi, pi].
std::pair<double, double> spherical_angles(const ChartPoint& p);
/// Position on the unit sphere in R^3.
Eigen::Vector3d embed_in_r3(const ChartPoint& p);
/// d(embed_in_r3)/d(coords), a 3x2 matrix.
Eigen::Matrix<double, 3, 2> embedding_jacobian(const ChartPoint& p);

/// Circle of constant colatitude traversed once with increasing azimuth.
/// Uses the chart in which the circle has radius <= 1 and polar
/// interpolation, so the loop is exact for any sample count >= 3.
Path latitude_loop(double theta, int samples = 64, double phi_start = 0);

}  // namespace gaugekit
