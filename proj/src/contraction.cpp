#include "gaugekit/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaugekit/error.hpp"

namespace gaugekit {

namespace {

constexpr double kSettled = 1e-14;
constexpr double kMaxNeighbourAngle = std::numbers::pi / 2;

// Smallest angle between -c and the loop.
double clearance(const Versord& c, std::span<const Versord> loop) {
  double worst = std::numbers::pi;
  for (const auto& x : loop) worst = std::min(worst, (-c).angleTo(x));
  return worst;
}

Versord choose_centre(std::span<const Versord> loop) {
  Quaterniond sum = Quaterniond::Zero();
  for (std::size_t k = 0; k + 1 < loop.size(); ++k) sum += loop[k].quaternion();
  std::vector<Versord> candidates;
  if (sum.norm() > 1e-6 * double(loop.size())) {
    const Versord mean(sum);
    if (clearance(mean, loop) >= std::numbers::pi / 4) return mean;
    candidates.push_back(mean);
  }
  for (const Quaterniond& e : {Quaterniond::Identity(), Quaterniond::UnitI(), Quaterniond::UnitJ(), Quaterniond::UnitK()}) {
    candidates.emplace_back(e);
    candidates.emplace_back(-e);
  }
  Versord best = candidates.front();
  double best_clearance = -1;
  for (const auto& c : candidates) {
    const double cl = clearance(c, loop);
    if (cl > best_clearance) {
      best = c;
      best_clearance = cl;
    }
  }
  if (best_clearance < 1e-6) throw Error(ErrorCode::ContractionFailed, "no centre clear of the loop's antipodes");
  return best;
}

std::vector<Versord> refine(const std::vector<Versord>& loop) {
  std::vector<Versord> out;
  out.reserve(2 * loop.size() - 1);
  for (std::size_t k = 0; k + 1 < loop.size(); ++k) {
    out.push_back(loop[k]);
    out.push_back(loop[k].slerp(loop[k + 1], 0.5));
  }
  out.push_back(loop.back());
  return out;
}

double neighbour_step(const std::vector<Versord>& stage) {
  double step = 0;
  for (std::size_t k = 0; k + 1 < stage.size(); ++k) step = std::max(step, stage[k].angleTo(stage[k + 1]));
  return step;
}

}  // namespace

LoopContraction contract_loop(std::span<const Versord> loop) {
  if (loop.size() < 3) throw Error(ErrorCode::InvalidArgument, "contraction needs a sampled loop");
  if (loop.front().angleTo(loop.back()) > 1e-9) throw Error(ErrorCode::NotClosed, "versor loop does not close");
  const Versord centre = choose_centre(loop);
  std::vector<Versord> samples(loop.begin(), loop.end());
  while (true) {
    LoopContraction out;
    out.centre = centre;
    out.stride = (samples.size() - 1) / (loop.size() - 1);
    out.stages.push_back(samples);
    out.max_step = neighbour_step(samples);
    bool ok = out.max_step <= kMaxNeighbourAngle;
    for (int round = 0; ok && round < kMaxContractionRounds; ++round) {
      const auto& prev = out.stages.back();
      double far = 0;
      for (const auto& x : prev) far = std::max(far, x.angleTo(centre));
      if (far <= kSettled) break;
      std::vector<Versord> next;
      next.reserve(prev.size());
      for (const auto& x : prev) next.emplace_back(x.quaternion() + centre.quaternion());
      out.max_step = std::max(out.max_step, neighbour_step(next));
      ok = out.max_step <= kMaxNeighbourAngle;
      out.stages.push_back(std::move(next));
    }
    if (ok) {
      for (const auto& x : out.stages.back()) out.spread = std::max(out.spread, x.angleTo(centre));
      out.stages.emplace_back(samples.size(), centre);
      return out;
    }
    if (2 * (samples.size() - 1) > kMaxContractionSamples) {
      throw Error(ErrorCode::ContractionFailed, "subdivision exhausted at " + std::to_string(samples.size()) + " samples");
    }
    samples = refine(samples);
  }
}

}  // namespace gaugekit
