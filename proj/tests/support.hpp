#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "gaugekit/clifford.hpp"
#include "gaugekit/paths.hpp"
#include "gaugekit/random.hpp"

namespace gaugekit::oracle {

/// Blade as a sorted word over generators {1, 2, 3} with a sign.
struct Word {
  int sign = 1;
  std::vector<int> gens;
};

/// Product of blades by the Clifford relations alone: e_n e_m = -e_m e_n,
/// e_n^2 = -1. Independent of the quaternion model.
inline Word word_product(const Word& a, const Word& b) {
  Word out{a.sign * b.sign, a.gens};
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < out.gens.size(); ++k) {
      if (out.gens[k] > out.gens[k + 1]) {
        std::swap(out.gens[k], out.gens[k + 1]);
        out.sign = -out.sign;
        changed = true;
      } else if (out.gens[k] == out.gens[k + 1]) {
        out.gens.erase(out.gens.begin() + long(k), out.gens.begin() + long(k) + 2);
        out.sign = -out.sign;
        changed = true;
        break;
      }
    }
  }
  return out;
}

/// Blade words in the order of kBladeNames: 1, e1, e2, e3, e12, e23, e31, e123.
/// e31 is stored as -e13.
inline std::array<Word, 8> blade_words() {
  return {Word{1, {}}, Word{1, {1}}, Word{1, {2}}, Word{1, {3}}, Word{1, {1, 2}}, Word{1, {2, 3}}, Word{-1, {1, 3}},
          Word{1, {1, 2, 3}}};
}

/// Index and sign of the blade equal to +-w.
inline std::pair<int, int> identify(const Word& w) {
  const auto words = blade_words();
  for (int c = 0; c < 8; ++c) {
    if (words[std::size_t(c)].gens == w.gens) return {c, w.sign * words[std::size_t(c)].sign};
  }
  return {-1, 0};
}

/// Least-squares slope of log10(err) against log10(steps), negated.
inline double loglog_slope(std::span<const double> steps, std::span<const double> errors) {
  const std::size_t n = steps.size();
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < n; ++k) {
    mx += std::log10(steps[k]) / double(n);
    my += std::log10(errors[k]) / double(n);
  }
  double sxy = 0, sxx = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double dx = std::log10(steps[k]) - mx;
    sxy += dx * (std::log10(errors[k]) - my);
    sxx += dx * dx;
  }
  return -sxy / sxx;
}

/// Random polyline in the flat chart over [-1, 1]^2.
inline Path random_flat_path(Rng& rng, int vertices) {
  std::vector<ChartPoint> pts;
  for (int k = 0; k < vertices; ++k) pts.push_back({Chart::Flat, {rng.uniform(-1, 1), rng.uniform(-1, 1)}});
  return Path(pts);
}

/// Random polyline starting at `start`.
inline Path random_flat_path_from(Rng& rng, const ChartPoint& start, int vertices) {
  std::vector<ChartPoint> pts{start};
  for (int k = 1; k < vertices; ++k) pts.push_back({Chart::Flat, {rng.uniform(-1, 1), rng.uniform(-1, 1)}});
  return Path(pts);
}

/// Chain of `count` random polylines, each starting where the previous ends.
inline std::vector<Path> random_chain(Rng& rng, int count) {
  std::vector<Path> out{random_flat_path(rng, 3)};
  while (int(out.size()) < count) out.push_back(random_flat_path_from(rng, out.back().final(), 3));
  return out;
}

}  // namespace gaugekit::oracle
