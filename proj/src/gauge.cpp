#include "gaugekit/gauge.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "gaugekit/manifold.hpp"
#include "gaugekit/random.hpp"

namespace gaugekit {

namespace {

constexpr double kDifferenceStep = 1e-3;

GroupElement exp_algebra(GroupKind group, const Eigen::Vector3d& v) {
  return group == GroupKind::U1 ? GroupElement::phase(v.x()) : GroupElement(Versord::Exp(v));
}

struct Mode {
  Eigen::Vector3d wave;
  double phase;
  Eigen::Vector3d coefficient;
};

std::vector<Mode> draw_modes(Rng& rng, int count, bool planar, double amplitude) {
  std::vector<Mode> modes;
  for (int m = 0; m < count; ++m) {
    Mode mode{rng.uniform3(-1.5, 1.5), rng.uniform(0, 2 * std::numbers::pi), amplitude * rng.uniform3(-1, 1)};
    if (planar) mode.wave.z() = 0;
    modes.push_back(mode);
  }
  return modes;
}

Eigen::Vector3d sum_modes(const std::vector<Mode>& modes, const Eigen::Vector3d& x) {
  Eigen::Vector3d out = Eigen::Vector3d::Zero();
  for (const auto& m : modes) out += m.coefficient * std::sin(m.wave.dot(x) + m.phase);
  return out;
}

}  // namespace

GaugeTransformation::GaugeTransformation(GroupKind group, ChartGauge flat, ChartGauge north, ChartGauge south)
    : group_(group),
      maps_(std::make_shared<const std::array<ChartGauge, 3>>(
          std::array<ChartGauge, 3>{std::move(flat), std::move(north), std::move(south)})) {}

GaugeTransformation GaugeTransformation::identity(GroupKind group) { return constant(GroupElement::identity(group)); }

GaugeTransformation GaugeTransformation::constant(const GroupElement& g) {
  const ChartGauge c = [g](const Eigen::Vector2d&) { return g; };
  return GaugeTransformation(g.kind(), c, c, c);
}

GaugeTransformation GaugeTransformation::random_flat(GroupKind group, std::uint64_t seed, double amplitude, int modes) {
  Rng rng(seed);
  const auto m = draw_modes(rng, modes, true, amplitude);
  return GaugeTransformation(
      group, [group, m](const Eigen::Vector2d& x) { return exp_algebra(group, sum_modes(m, {x.x(), x.y(), 0})); },
      nullptr, nullptr);
}

GaugeTransformation GaugeTransformation::random_for(const PrincipalBundle& bundle, std::uint64_t seed, double amplitude,
                                                    int modes) {
  const GroupKind group = bundle.group();
  if (bundle.base().kind() == ManifoldKind::FlatChart) return random_flat(group, seed, amplitude, modes);
  const auto& tf = *bundle.transition_function();
  if (group == GroupKind::SU2 && !tf.charge()) {
    throw Error(ErrorCode::NotApplicable, "random SU(2) sphere gauges need a charge-type transition");
  }
  const int charge = tf.charge().value_or(0);
  Rng rng(seed);
  const auto m = draw_modes(rng, modes, false, amplitude);
  // Generator on the embedded sphere; i, j parts vanish to high order at the
  // south pole so the conjugated South map stays smooth there.
  const auto generator = [group, m](const Eigen::Vector3d& X) {
    Eigen::Vector3d v = sum_modes(m, X);
    if (group == GroupKind::SU2) v.head<2>() *= std::pow((1 + X.z()) / 2, 4);
    return v;
  };
  ChartGauge north = [group, generator](const Eigen::Vector2d& x) {
    return exp_algebra(group, generator(embed_in_r3({Chart::North, x})));
  };
  ChartGauge south = [group, generator, charge](const Eigen::Vector2d& y) {
    Eigen::Vector3d v = generator(embed_in_r3({Chart::South, y}));
    if (group == GroupKind::SU2 && y.squaredNorm() > 0) {
      const double a = 2.0 * charge * std::atan2(y.y(), y.x());
      const Eigen::Vector2d ij = v.head<2>();
      v.head<2>() << std::cos(a) * ij.x() - std::sin(a) * ij.y(), std::sin(a) * ij.x() + std::cos(a) * ij.y();
    }
    return exp_algebra(group, v);
  };
  return GaugeTransformation(group, nullptr, north, south);
}

GroupElement GaugeTransformation::at(const ChartPoint& p) const {
  const auto& f = chart_map(p.chart);
  if (!f) throw Error(ErrorCode::PathOutsideAtlas, "gauge transformation undefined in chart " + std::string(to_string(p.chart)));
  return f(p.coords);
}

ConnectionForm gauge_transform(const ConnectionForm& conn, const PrincipalBundle& bundle,
                               const GaugeTransformation& g) {
  if (conn.group() != bundle.group() || g.group() != bundle.group()) {
    throw Error(ErrorCode::TypeMismatch, "gauge, connection and bundle groups differ");
  }
  const GroupKind group = conn.group();
  std::array<ChartForm, 3> forms;
  for (Chart c : {Chart::Flat, Chart::North, Chart::South}) {
    if (!conn.has_chart(c) || !g.has_chart(c)) continue;
    const ChartForm a = conn.chart_form(c);
    const ChartGauge gc = g.chart_map(c);
    forms[static_cast<std::size_t>(c)] = [a, gc, group](const Eigen::Vector2d& x) {
      const Quaterniond gx = gc(x).as_quaternion();
      const Quaterniond ginv = gx.conjugate();
      const FormValue ax = a(x);
      FormValue out;
      for (int d = 0; d < 2; ++d) {
        const Eigen::Vector2d e = Eigen::Vector2d::Unit(d) * kDifferenceStep;
        const Quaterniond dg = (gc(x - 2 * e).as_quaternion() - gc(x + 2 * e).as_quaternion() +
                                (gc(x + e).as_quaternion() - gc(x - e).as_quaternion()) * 8.0) /
                               (12 * kDifferenceStep);
        const Quaterniond value = ginv * Quaterniond::Pure(ax.col(d)) * gx + ginv * dg;
        out.col(d) = value.vec();
      }
      if (group == GroupKind::U1) out.bottomRows<2>().setZero();
      return out;
    };
  }
  return ConnectionForm(group, forms[0], forms[1], forms[2]);
}

GroupElement gauge_transform_transporter(const GroupElement& t, const GaugeTransformation& g, const Path& path) {
  return g.at(path.final()).inverse() * t * g.at(path.initial());
}

}  // namespace gaugekit
