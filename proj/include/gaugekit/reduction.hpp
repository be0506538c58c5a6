#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gaugekit/clifford.hpp"
#include "gaugekit/spin.hpp"
#include "gaugekit/triviality.hpp"

namespace gaugekit {

inline constexpr std::size_t kMinLoopIntervals = 256;
inline constexpr double kLoopClosureTolerance = 1e-9;

/// Closed loop sampled at phi_k = 2 pi k / N, k = 0..N, with N >= 256 and the
/// last sample within 1e-9 of the first.
template <typename Element>
class TransitionLoop {
 public:
  explicit TransitionLoop(std::vector<Element> samples);

  const std::vector<Element>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  std::size_t intervals() const { return samples_.size() - 1; }
  const Element& operator[](std::size_t k) const { return samples_[k]; }

 private:
  std::vector<Element> samples_;
};

using IclLoop = TransitionLoop<Cl03d>;
using Spin4Loop = TransitionLoop<Spin4d>;
/// Fiber S^3 loop.
using VersorLoop = TransitionLoop<Versord>;
/// Fiber S^1 loop, as phases.
using PhaseLoop = TransitionLoop<double>;

extern template class TransitionLoop<Cl03d>;
extern template class TransitionLoop<Spin4d>;
extern template class TransitionLoop<Versord>;
extern template class TransitionLoop<double>;

/// Drops the radial parts: x -> (v1, v2). Throws NotInvertible naming the
/// sample index.
Spin4Loop polar_retract(const IclLoop& loop);
/// Pointwise u v^-1.
VersorLoop quotient_fiber_loop(const Spin4Loop& loop);

enum class ReductionOutcome { Reduced, Obstructed };

struct ReductionVerdict {
  ReductionOutcome outcome = ReductionOutcome::Reduced;
  std::optional<int> obstruction;
  /// Fiber section (North identity, South rings) when reduced.
  std::optional<GlobalSection> section;
  double residual = 0;
  /// Reduced Spin(3) transition, from reduce_pipeline only.
  std::optional<VersorLoop> reduced_transition;
};

/// S^1 fiber: obstructed by a nonzero winding, otherwise reduced with an
/// unwrapped-phase section. Throws NotClosed when a phase step reaches pi/2.
ReductionVerdict section_glue_test(const PhaseLoop& fiber);
/// S^3 fiber: reduced with a contracted section; ContractionFailed otherwise.
ReductionVerdict section_glue_test(const VersorLoop& fiber);

/// polar_retract, quotient_fiber_loop, section_glue_test. With s_N = 1 and
/// s_S the fiber section, the lift (s_S, 1) turns the Spin(4) transition
/// (u, v) into (s_S^-1 u, v); its diagonality enters the residual and v is
/// returned as the reduced transition.
ReductionVerdict reduce_pipeline(const IclLoop& loop);

/// Loop generators, N intervals.
IclLoop icl_constant_loop(const Cl03d& x, std::size_t n = kMinLoopIntervals);
/// (exp(k w phi) (+) 1) scaled by a smooth positive radius.
IclLoop icl_winding_loop(int w, std::size_t n = kMinLoopIntervals);
/// Each summand r(phi) R exp(a w phi) exp(b(phi)) with random r, R, axis a,
/// w in [-2, 2] and a small smooth b.
IclLoop icl_random_loop(std::uint64_t seed, std::size_t n = kMinLoopIntervals);
PhaseLoop phase_winding_loop(int w, std::size_t n = kMinLoopIntervals);
VersorLoop versor_circle_loop(const Eigen::Vector3d& axis, std::size_t n = kMinLoopIntervals);

}  // namespace gaugekit
