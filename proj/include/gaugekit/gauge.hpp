#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>

#include "gaugekit/bundle.hpp"
#include "gaugekit/connection.hpp"

namespace gaugekit {

using ChartGauge = std::function<GroupElement(const Eigen::Vector2d&)>;

/// Local gauge transformation g, one smooth group-valued map per chart.
/// Fiber representatives change as rep' = g^-1 rep.
class GaugeTransformation {
 public:
  GaugeTransformation(GroupKind group, ChartGauge flat, ChartGauge north, ChartGauge south);

  static GaugeTransformation identity(GroupKind group);
  static GaugeTransformation constant(const GroupElement& g);
  /// exp of a few random Fourier modes on the flat chart.
  static GaugeTransformation random_flat(GroupKind group, std::uint64_t seed, double amplitude = 1.0, int modes = 3);
  /// Random smooth gauge compatible with the bundle's transition: on a sphere
  /// g_S = g_SN g_N g_SN^-1 on the overlap. SU(2) sphere bundles need a
  /// charge-type transition (NotApplicable otherwise).
  static GaugeTransformation random_for(const PrincipalBundle& bundle, std::uint64_t seed, double amplitude = 1.0,
                                        int modes = 3);

  GroupKind group() const { return group_; }
  bool has_chart(Chart c) const { return bool((*maps_)[static_cast<std::size_t>(c)]); }
  const ChartGauge& chart_map(Chart c) const { return (*maps_)[static_cast<std::size_t>(c)]; }
  GroupElement at(const ChartPoint& p) const;

 private:
  GroupKind group_;
  std::shared_ptr<const std::array<ChartGauge, 3>> maps_;
};

/// A' = g^-1 A g + g^-1 dg in every chart both are defined on, so that
/// T'(path) = g(final)^-1 T(path) g(initial). dg uses a fourth-order central
/// difference.
ConnectionForm gauge_transform(const ConnectionForm& conn, const PrincipalBundle& bundle,
                               const GaugeTransformation& g);

/// g(final)^-1 t g(initial): how a transporter along `path` changes.
GroupElement gauge_transform_transporter(const GroupElement& t, const GaugeTransformation& g, const Path& path);

}  // namespace gaugekit
