#include "gaugekit/transport.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

namespace gaugekit {

namespace {

Chart opposite(Chart c) { return c == Chart::North ? Chart::South : Chart::North; }

class Integrator {
 public:
  Integrator(const ConnectionForm& conn, const PrincipalBundle& bundle, double comfort)
      : conn_(conn), bundle_(bundle), comfort_(comfort) {}

  GroupElement run(const Path& path, int steps) {
    const bool sphere = bundle_.base().kind() == ManifoldKind::TwoChartSphere;
    const double total = path.length();
    Quaterniond t = Quaterniond::Identity();
    Chart current = path.initial().chart;

    const auto maybe_switch = [&](const ChartPoint& p) {
      if (!sphere) return;
      const Eigen::Vector2d x = chart_transition(p.chart, current, p.coords);
      if (x.norm() <= comfort_) return;
      const Chart next = opposite(current);
      t = bundle_.transition(current, next, x).as_quaternion() * t;
      current = next;
    };

    maybe_switch(path.initial());
    for (std::size_t k = 0; k < path.segment_count(); ++k) {
      const PathSegment seg = path.segment(k);
      const double len = seg.length();
      const int m = total > 0 ? std::max(1, int(std::lround(steps * len / total))) : 1;
      if (len > 0) t = integrate_segment(seg, current, t, m);
      maybe_switch(path.samples()[k + 1]);
    }
    const Chart target = path.final().chart;
    if (current != target) {
      const Eigen::Vector2d x = chart_transition(path.final().chart, current, path.final().coords);
      t = bundle_.transition(current, target, x).as_quaternion() * t;
    }
    return GroupElement::from_quaternion(bundle_.group(), t);
  }

 private:
  // -A[gamma'] in the integration chart, at segment parameter tau.
  Quaterniond generator(const PathSegment& seg, Chart chart, double tau) const {
    Eigen::Vector2d x = seg.point(tau);
    Eigen::Vector2d v = seg.velocity(tau);
    if (seg.chart() != chart) {
      v = chart_transition_jacobian(seg.chart(), chart, x) * v;
      x = chart_transition(seg.chart(), chart, x);
    }
    return -conn_.contract(chart, x, v);
  }

  Quaterniond integrate_segment(const PathSegment& seg, Chart chart, Quaterniond t, int m) const {
    const double h = 1.0 / m;
    Quaterniond f0 = generator(seg, chart, 0.0);
    for (int i = 0; i < m; ++i) {
      const double tau = i * h;
      const Quaterniond fm = generator(seg, chart, tau + h / 2);
      const Quaterniond f1 = generator(seg, chart, i + 1 == m ? 1.0 : tau + h);
      const Quaterniond k1 = f0 * t;
      const Quaterniond k2 = fm * (t + k1 * (h / 2));
      const Quaterniond k3 = fm * (t + k2 * (h / 2));
      const Quaterniond k4 = f1 * (t + k3 * h);
      t += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6);
      t = t / t.norm();
      f0 = f1;
    }
    return t;
  }

  const ConnectionForm& conn_;
  const PrincipalBundle& bundle_;
  double comfort_;
};

void check_inputs(const ConnectionForm& conn, const PrincipalBundle& bundle, const Path& path, int steps) {
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "transport needs at least one step");
  if (conn.group() != bundle.group()) throw Error(ErrorCode::TypeMismatch, "connection and bundle groups differ");
  bundle.base().validate(path);
}

}  // namespace

GroupElement transport(const ConnectionForm& conn, const PrincipalBundle& bundle, const Path& path,
                       const TransportOptions& options) {
  check_inputs(conn, bundle, path, options.steps);
  double comfort = std::numeric_limits<double>::infinity();
  if (bundle.base().kind() == ManifoldKind::TwoChartSphere) {
    comfort = options.comfort_radius.value_or(bundle.base().sphere_model().overlap_radius);
  }
  Integrator integrator(conn, bundle, comfort);
  const GroupElement result = integrator.run(path, options.steps);
  if (options.check_convergence) {
    const GroupElement refined = integrator.run(path, 2 * options.steps);
    const double gap = distance(result, refined);
    if (gap > options.convergence_tol) {
      throw Error(ErrorCode::NonConvergent, "step-halving disagreement " + std::to_string(gap));
    }
  }
  return result;
}

GroupElement transport(const ConnectionForm& conn, const PrincipalBundle& bundle, const Path& path, int steps) {
  TransportOptions options;
  options.steps = steps;
  return transport(conn, bundle, path, options);
}

std::vector<GroupElement> transport_all(const ConnectionForm& conn, const PrincipalBundle& bundle,
                                        std::span<const Path> paths, int steps) {
  std::vector<GroupElement> out(paths.size());
  const std::size_t workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < paths.size(); i += workers) out[i] = transport(conn, bundle, paths[i], steps);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

GroupElement loop_holonomy(const ConnectionForm& conn, const PrincipalBundle& bundle, const Path& loop, int steps) {
  if (!loop.is_closed(kEndpointTolerance)) throw Error(ErrorCode::NotClosed, "holonomy needs a closed path");
  return transport(conn, bundle, loop, steps);
}

ConnectionForm canonical_flat(const PrincipalBundle& bundle) {
  if (bundle.base().kind() != ManifoldKind::FlatChart) {
    throw Error(ErrorCode::NotTrivializable, "a two-chart bundle carries no global trivialization to make flat");
  }
  return ConnectionForm::zero(bundle.group());
}

GroupElement compare_connections(const ConnectionForm& a1, const ConnectionForm& a2, const PrincipalBundle& bundle,
                                 const Path& path, int steps) {
  return transport(a2, bundle, path, steps).inverse() * transport(a1, bundle, path, steps);
}

std::string_view to_string(Action action) { return action == Action::Fundamental ? "fundamental" : "adjoint"; }

Action action_from_string(std::string_view name) {
  if (name == "fundamental") return Action::Fundamental;
  if (name == "adjoint") return Action::Adjoint;
  throw Error(ErrorCode::UnknownAction, "unknown action '" + std::string(name) + "'");
}

FiberValue associated_transport(const ConnectionForm& conn, const PrincipalBundle& bundle, const Path& path,
                                const FiberValue& f0, Action action, int steps) {
  const GroupElement t = transport(conn, bundle, path, steps);
  if (action == Action::Fundamental) {
    const auto* g = std::get_if<GroupElement>(&f0);
    if (!g) throw Error(ErrorCode::TypeMismatch, "fundamental action needs a group-valued fiber");
    return t * *g;
  }
  const auto* v = std::get_if<Eigen::Vector3d>(&f0);
  if (!v) throw Error(ErrorCode::TypeMismatch, "adjoint action needs a 3-vector fiber");
  if (t.kind() == GroupKind::U1) return *v;
  return Eigen::Vector3d(t.versor().rotate(*v));
}

int phase_winding(std::span<const double> phases) {
  if (phases.size() < 2) throw Error(ErrorCode::InvalidArgument, "winding needs a sampled loop");
  double total = 0;
  for (std::size_t k = 0; k + 1 < phases.size(); ++k) {
    const double step = wrap_phase(phases[k + 1] - phases[k]);
    if (std::abs(step) >= std::numbers::pi / 2) {
      throw Error(ErrorCode::NotClosed, "phase step too large to unwrap; resample the loop");
    }
    total += step;
  }
  if (std::abs(wrap_phase(phases.back() - phases.front())) > 1e-9) {
    throw Error(ErrorCode::NotClosed, "phase loop does not close");
  }
  return int(std::lround(total / (2 * std::numbers::pi)));
}

int equator_winding(const PrincipalBundle& bundle) {
  const auto& tf = bundle.transition_function();
  if (bundle.base().kind() != ManifoldKind::TwoChartSphere || !tf) {
    throw Error(ErrorCode::NotApplicable, "winding is defined for two-chart sphere bundles");
  }
  if (bundle.group() != GroupKind::U1) throw Error(ErrorCode::NotApplicable, "winding is defined for U(1) transitions");
  if (!tf->charge()) {
    // A table interpolates along wrapped increments, so its own samples
    // carry the exact winding of the interpolant.
    const auto& table = tf->table();
    double total = 0;
    for (std::size_t k = 0; k < table.size(); ++k) {
      total += wrap_phase(table[(k + 1) % table.size()].theta() - table[k].theta());
    }
    return int(std::lround(total / (2 * std::numbers::pi)));
  }
  for (int samples = 256; samples <= (1 << 20); samples *= 2) {
    std::vector<double> phases;
    for (int j = 0; j <= samples; ++j) phases.push_back(tf->at(2 * std::numbers::pi * j / samples).theta());
    try {
      return phase_winding(phases);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotClosed) throw;
    }
  }
  throw Error(ErrorCode::NotClosed, "transition phase could not be unwrapped");
}

}  // namespace gaugekit
