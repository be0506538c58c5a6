#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "gaugekit/bundle.hpp"
#include "gaugekit/connection.hpp"

namespace gaugekit {

struct TransportOptions {
  int steps = 10000;
  /// Chart-switch radius; defaults to the bundle's overlap radius.
  std::optional<double> comfort_radius;
  /// Re-run at twice the steps and throw NonConvergent on disagreement.
  bool check_convergence = false;
  double convergence_tol = 1e-6;
};

/// Parallel transporter along `path`: the solution at the end of
///   dT/dt = -A(gamma(t))[gamma'(t)] T,   T(0) = 1,
/// mapping fiber representatives at the initial point (in the chart of the
/// first sample) to representatives at the final point (chart of the last
/// sample). Classical RK4 on the quaternions with renormalization after every
/// step; `steps` is split over the segments by length. On the sphere the
/// integrator changes chart at a sample whose coordinates exceed the comfort
/// radius, left-multiplying by the bundle transition there.
GroupElement transport(const ConnectionForm& conn, const PrincipalBundle& bundle, const Path& path,
                       const TransportOptions& options);
GroupElement transport(const ConnectionForm& conn, const PrincipalBundle& bundle, const Path& path, int steps);

/// Transport of many paths on a worker pool; results are in input order and
/// identical to sequential calls.
std::vector<GroupElement> transport_all(const ConnectionForm& conn, const PrincipalBundle& bundle,
                                        std::span<const Path> paths, int steps);

/// Transport around a closed loop. Throws NotClosed unless the endpoints
/// agree to 1e-9.
GroupElement loop_holonomy(const ConnectionForm& conn, const PrincipalBundle& bundle, const Path& loop, int steps);

/// The zero-curvature connection of the global trivialization. Only a flat
/// chart has one; two-chart bundles throw NotTrivializable.
ConnectionForm canonical_flat(const PrincipalBundle& bundle);

/// g with (lift under a1) = (lift under a2) g at the final point, i.e.
/// transport(a2)^-1 transport(a1), for the identity initial representative.
GroupElement compare_connections(const ConnectionForm& a1, const ConnectionForm& a2, const PrincipalBundle& bundle,
                                 const Path& path, int steps);

/// Representation of G on the fiber of an associated bundle.
enum class Action { Fundamental, Adjoint };
std::string_view to_string(Action action);
Action action_from_string(std::string_view name);

/// Fiber value: a group element (fundamental, F = G) or a 3-vector (adjoint).
using FiberValue = std::variant<GroupElement, Eigen::Vector3d>;

FiberValue associated_transport(const ConnectionForm& conn, const PrincipalBundle& bundle, const Path& path,
                                const FiberValue& f0, Action action, int steps);

/// Degree of the U(1) clutching function around the equator, by phase
/// unwrapping over at least 256 samples.
int equator_winding(const PrincipalBundle& bundle);

/// Total unwrapped phase of a closed sampled phase loop divided by 2 pi.
/// Throws NotClosed when a step reaches pi/2 (too coarse to unwrap safely) or
/// when the loop does not close.
int phase_winding(std::span<const double> phases);

}  // namespace gaugekit
