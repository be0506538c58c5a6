#include "gaugekit/bundle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gaugekit {

TransitionFunction TransitionFunction::charge(GroupKind group, int n) { return TransitionFunction(group, n, {}); }

TransitionFunction TransitionFunction::sampled(GroupKind group, std::vector<GroupElement> samples) {
  if (samples.size() < 3) throw Error(ErrorCode::InvalidArgument, "transition table needs at least three samples");
  for (const auto& g : samples) {
    if (g.kind() != group) throw Error(ErrorCode::TypeMismatch, "transition table group mismatch");
  }
  return TransitionFunction(group, std::nullopt, std::move(samples));
}

GroupElement TransitionFunction::at(double phi) const {
  if (charge_) {
    const double angle = *charge_ * phi;
    if (group_ == GroupKind::U1) return GroupElement::phase(angle);
    return GroupElement(Versord::Exp(Eigen::Vector3d::UnitZ(), angle));
  }
  const double n = double(table_.size());
  double u = phi / (2 * std::numbers::pi) * n;
  u -= n * std::floor(u / n);
  const auto k = std::min(std::size_t(u), table_.size() - 1);
  const double t = u - double(k);
  const auto& a = table_[k];
  const auto& b = table_[(k + 1) % table_.size()];
  if (group_ == GroupKind::U1) return GroupElement::phase(a.theta() + t * wrap_phase(b.theta() - a.theta()));
  return GroupElement(a.versor().slerp(b.versor(), t));
}

PrincipalBundle PrincipalBundle::trivial(const Manifold& base, GroupKind group) {
  if (base.kind() != ManifoldKind::FlatChart) {
    throw Error(ErrorCode::InvalidArgument, "trivial bundles are modelled over flat charts; use sphere() with a transition");
  }
  return PrincipalBundle(base, group, std::nullopt);
}

PrincipalBundle PrincipalBundle::sphere(GroupKind group, const TransitionFunction& transition, double overlap_radius) {
  if (transition.group() != group) throw Error(ErrorCode::TypeMismatch, "transition group differs from bundle group");
  return PrincipalBundle(Manifold::sphere(overlap_radius), group, transition);
}

GroupElement PrincipalBundle::transition(Chart from, Chart to, const Eigen::Vector2d& x) const {
  if (from == to) return GroupElement::identity(group_);
  if (!transition_) throw Error(ErrorCode::PathOutsideAtlas, "bundle has a single chart");
  if (from == Chart::Flat || to == Chart::Flat) throw Error(ErrorCode::PathOutsideAtlas, "flat chart on a sphere bundle");
  const double phi = std::atan2(x.y(), x.x());
  const GroupElement g_sn = transition_->at(phi);
  return from == Chart::North ? g_sn : g_sn.inverse();
}

double PrincipalBundle::cocycle_residual(int samples) const {
  if (!transition_) return 0;
  const double band = base_.sphere_model().overlap_radius;
  double worst = 0;
  for (int j = 0; j < samples; ++j) {
    const double phi = 2 * std::numbers::pi * j / samples;
    for (double r : {1 / band, 1.0, band}) {
      const Eigen::Vector2d x(r * std::cos(phi), r * std::sin(phi));
      const GroupElement g_sn = transition(Chart::North, Chart::South, x);
      const GroupElement g_ns = transition(Chart::South, Chart::North, chart_transition(Chart::North, Chart::South, x));
      worst = std::max(worst, distance(g_ns * g_sn, GroupElement::identity(group_)));
    }
  }
  return worst;
}

}  // namespace gaugekit
