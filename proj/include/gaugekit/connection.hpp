#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include <Eigen/Core>

#include "gaugekit/group_element.hpp"
#include "gaugekit/paths.hpp"

namespace gaugekit {

/// Local connection 1-form at a point: column d holds A(e_d) as the
/// (i, j, k) coefficients of an imaginary quaternion. U(1) forms only use
/// the i row, since u(1) = i R.
using FormValue = Eigen::Matrix<double, 3, 2>;
using ChartForm = std::function<FormValue(const Eigen::Vector2d&)>;

/// A smooth connection given by its local forms, one per chart.
///
/// Immutable; copies share the chart functions.
class ConnectionForm {
 public:
  ConnectionForm(GroupKind group, ChartForm flat, ChartForm north, ChartForm south);

  static ConnectionForm zero(GroupKind group);
  /// Constant coefficients on the flat chart.
  static ConnectionForm constant(GroupKind group, const FormValue& value);
  /// A_N = (n/2)(1 - cos theta) dphi, A_S = -(n/2)(1 + cos theta) dphi along i
  /// (U(1)) or k (SU(2)); compatible with TransitionFunction::charge(n).
  static ConnectionForm monopole(GroupKind group, int charge);
  /// Bilinear interpolation of values on a regular grid over [lower, upper] in
  /// one chart; values are row-major with nu columns (u fastest).
  static ConnectionForm grid(GroupKind group, Chart chart, const Eigen::Vector2d& lower, const Eigen::Vector2d& upper,
                             int nu, int nv, std::vector<FormValue> values);
  /// Sum of a few random Fourier modes on the flat chart.
  static ConnectionForm random_smooth(GroupKind group, std::uint64_t seed, double amplitude = 1.0, int modes = 3);
  /// Monopole of the given charge plus a random smooth 1-form pulled back
  /// from R^3, conjugated into the South chart so the pair stays compatible
  /// with TransitionFunction::charge(charge).
  static ConnectionForm random_sphere(GroupKind group, int charge, std::uint64_t seed, double amplitude = 0.5,
                                      int modes = 3);

  GroupKind group() const { return group_; }
  bool has_chart(Chart chart) const { return bool(forms_->at(index(chart))); }
  const ChartForm& chart_form(Chart chart) const { return forms_->at(index(chart)); }

  /// Throws PathOutsideAtlas when the form has no representative in `chart`.
  FormValue evaluate(Chart chart, const Eigen::Vector2d& x) const;
  /// A(x)[velocity] as an imaginary quaternion.
  Quaterniond contract(Chart chart, const Eigen::Vector2d& x, const Eigen::Vector2d& velocity) const;

  ConnectionForm operator+(const ConnectionForm& other) const;

 private:
  static std::size_t index(Chart c) { return static_cast<std::size_t>(c); }

  GroupKind group_;
  std::shared_ptr<const std::array<ChartForm, 3>> forms_;
};

}  // namespace gaugekit
