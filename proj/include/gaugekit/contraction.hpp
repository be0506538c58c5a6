#pragma once

#include <span>
#include <vector>

#include "gaugekit/quaternion.hpp"

namespace gaugekit {

/// Null-homotopy of a closed versor loop, stage by stage.
///
/// stages[0] is the (possibly refined) input loop; every later stage moves
/// each sample to the geodesic midpoint between it and `centre`. The last
/// stage is the constant loop at `centre`.
struct LoopContraction {
  std::vector<std::vector<Versord>> stages;
  Versord centre;
  /// Largest jump from the last midpoint stage onto the centre.
  double spread = 0;
  /// Largest angle between neighbouring samples over all stages.
  double max_step = 0;
  /// Input sample k sits at stages[0][k * stride].
  std::size_t stride = 1;
};

inline constexpr int kMaxContractionRounds = 64;
inline constexpr std::size_t kMaxContractionSamples = 8192;

/// Contracts a closed loop (last sample equal to the first) on S^3. The centre
/// is the normalised mean of the loop, or the best of +-1, +-i, +-j, +-k when
/// the mean is degenerate or too close to an antipode. Sampling doubles by
/// slerp while neighbours in any stage exceed pi/2. Throws ContractionFailed
/// past 8192 samples and NotClosed for open input.
LoopContraction contract_loop(std::span<const Versord> loop);

}  // namespace gaugekit
