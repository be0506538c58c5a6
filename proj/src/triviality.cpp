#include "gaugekit/triviality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaugekit/transport.hpp"

namespace gaugekit {

GlobalSection section_from_contraction(const LoopContraction& c, double outer_radius) {
  GlobalSection s;
  s.group = GroupKind::SU2;
  s.stride = c.stride;
  const std::size_t n = c.stages.size();
  for (std::size_t r = 0; r < n; ++r) {
    s.radii.push_back(n > 1 ? outer_radius * double(n - 1 - r) / double(n - 1) : 0.0);
    std::vector<GroupElement> ring;
    ring.reserve(c.stages[r].size());
    for (const auto& v : c.stages[r]) ring.emplace_back(v);
    s.rings.push_back(std::move(ring));
  }
  return s;
}

GlobalSection section_from_phases(std::span<const double> unwrapped, double outer_radius, int rings) {
  if (rings < 2) throw Error(ErrorCode::InvalidArgument, "section needs at least two rings");
  GlobalSection s;
  s.group = GroupKind::U1;
  for (int r = 0; r < rings; ++r) {
    const double scale = double(rings - 1 - r) / double(rings - 1);
    s.radii.push_back(outer_radius * scale);
    std::vector<GroupElement> ring;
    for (double theta : unwrapped) ring.push_back(GroupElement::phase(scale * theta));
    s.rings.push_back(std::move(ring));
  }
  return s;
}

double gluing_residual(const GlobalSection& s, std::span<const GroupElement> expected) {
  double worst = 0;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const GroupElement south =
        s.rings.empty() ? GroupElement::identity(expected[k].kind()) : s.rings.front().at(k * s.stride);
    worst = std::max(worst, distance(south, expected[k]));
  }
  return worst;
}

TrivialityVerdict triviality_test(const PrincipalBundle& bundle, int samples) {
  if (samples < 256) throw Error(ErrorCode::InvalidArgument, "triviality test needs at least 256 overlap samples");
  TrivialityVerdict verdict;
  if (bundle.base().kind() == ManifoldKind::FlatChart) {
    verdict.section = GlobalSection{bundle.group(), {}, {}, 1};
    return verdict;
  }
  const double inner = 1.0 / bundle.base().sphere_model().overlap_radius;
  const auto& tf = *bundle.transition_function();
  std::vector<GroupElement> loop;
  for (int j = 0; j < samples; ++j) loop.push_back(tf.at(2 * std::numbers::pi * j / samples));
  loop.push_back(loop.front());

  if (bundle.group() == GroupKind::U1) {
    const int w = equator_winding(bundle);
    if (w != 0) {
      verdict.outcome = Triviality::Nontrivial;
      verdict.winding = w;
      return verdict;
    }
    verdict.winding = 0;
    std::vector<double> unwrapped{loop.front().theta()};
    for (std::size_t k = 1; k < loop.size(); ++k) {
      unwrapped.push_back(unwrapped.back() + wrap_phase(loop[k].theta() - loop[k - 1].theta()));
    }
    verdict.section = section_from_phases(unwrapped, inner);
    verdict.residual = gluing_residual(*verdict.section, loop);
    return verdict;
  }

  std::vector<Versord> versors;
  for (const auto& g : loop) versors.push_back(g.versor());
  const LoopContraction c = contract_loop(versors);
  verdict.section = section_from_contraction(c, inner);
  verdict.residual = gluing_residual(*verdict.section, loop) + c.spread;
  return verdict;
}

}  // namespace gaugekit
