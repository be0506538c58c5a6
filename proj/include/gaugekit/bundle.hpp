#pragma once

#include <optional>
#include <vector>

#include "gaugekit/group_element.hpp"
#include "gaugekit/manifold.hpp"

namespace gaugekit {

/// Clutching function g_SN(phi) of a two-chart sphere bundle: the map taking
/// North fiber representatives to South ones on the overlap,
/// rep_S = g_SN(phi) rep_N.
class TransitionFunction {
 public:
  /// phi -> e^{i n phi} (U(1)) or exp(k n phi) (SU(2)).
  static TransitionFunction charge(GroupKind group, int n);
  /// Values at phi_k = 2 pi k / N, k = 0..N-1, interpolated periodically
  /// (phase-unwrapped for U(1), slerp for SU(2)).
  static TransitionFunction sampled(GroupKind group, std::vector<GroupElement> samples);

  GroupKind group() const { return group_; }
  const std::optional<int>& charge() const { return charge_; }
  const std::vector<GroupElement>& table() const { return table_; }

  GroupElement at(double phi) const;

 private:
  TransitionFunction(GroupKind group, std::optional<int> charge, std::vector<GroupElement> table)
      : group_(group), charge_(charge), table_(std::move(table)) {}

  GroupKind group_;
  std::optional<int> charge_;
  std::vector<GroupElement> table_;
};

/// Principal G-bundle over a flat chart (trivial) or over the two-chart sphere.
class PrincipalBundle {
 public:
  static PrincipalBundle trivial(const Manifold& base, GroupKind group);
  static PrincipalBundle sphere(GroupKind group, const TransitionFunction& transition, double overlap_radius = 1.2);
  static PrincipalBundle monopole(GroupKind group, int charge) {
    return sphere(group, TransitionFunction::charge(group, charge));
  }

  const Manifold& base() const { return base_; }
  GroupKind group() const { return group_; }
  const std::optional<TransitionFunction>& transition_function() const { return transition_; }

  /// g_{to,from}(x) with x in `from` coordinates: rep_to = g rep_from.
  GroupElement transition(Chart from, Chart to, const Eigen::Vector2d& x) const;

  /// max over sampled overlap points of d(g_NS g_SN, 1).
  double cocycle_residual(int samples = 256) const;

 private:
  PrincipalBundle(Manifold base, GroupKind group, std::optional<TransitionFunction> transition)
      : base_(std::move(base)), group_(group), transition_(std::move(transition)) {}

  Manifold base_;
  GroupKind group_;
  std::optional<TransitionFunction> transition_;
};

}  // namespace gaugekit
