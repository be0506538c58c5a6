#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gaugekit/bundle.hpp"
#include "gaugekit/contraction.hpp"

namespace gaugekit {

/// Sampled global section over the two-chart sphere.
///
/// The North part is the identity. The South part is given on rings about the
/// south pole: rings[r][j] sits at South radius radii[r] and phi = 2 pi j / M,
/// with M + 1 samples per ring (last equal to first). rings[0] lies on the
/// inner edge of the overlap band and the section is constant in the radius
/// across the band. A section without rings is the identity everywhere.
struct GlobalSection {
  GroupKind group = GroupKind::U1;
  std::vector<double> radii;
  std::vector<std::vector<GroupElement>> rings;
  /// Overlap sample k of the source loop is rings[0][k * stride].
  std::size_t stride = 1;
};

/// Rings from a contraction, outermost first.
GlobalSection section_from_contraction(const LoopContraction& c, double outer_radius);
/// U(1) rings exp(i (rho / rho_0) theta(phi)) from an unwrapped closed phase
/// loop.
GlobalSection section_from_phases(std::span<const double> unwrapped, double outer_radius, int rings = 9);

/// max_k d(s_S(phi_k), f(phi_k) s_N) against a closed loop of expected
/// South values f (s_N = 1).
double gluing_residual(const GlobalSection& s, std::span<const GroupElement> expected);

enum class Triviality { Trivial, Nontrivial };

struct TrivialityVerdict {
  Triviality outcome = Triviality::Trivial;
  std::optional<int> winding;
  std::optional<GlobalSection> section;
  double residual = 0;
};

/// Flat base: trivial with the identity section. U(1) sphere: trivial iff the
/// equator winding is 0, with an unwrapped-phase section. SU(2) sphere: always
/// trivial, with a section from contracting the transition loop; throws
/// ContractionFailed if that fails numerically.
TrivialityVerdict triviality_test(const PrincipalBundle& bundle, int samples = 256);

}  // namespace gaugekit
