#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include <Eigen/Core>

#include "gaugekit/quaternion.hpp"

namespace gaugekit {

/// Seeded generator with distribution code written out, so a seed gives the
/// same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
  }
  Eigen::Vector3d normal3() { return {normal(), normal(), normal()}; }
  Eigen::Vector3d uniform3(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}; }
  Quaterniond normal_quaternion() { return Quaterniond(normal(), normal(), normal(), normal()); }
  /// Haar-random unit quaternion.
  Versord versor() { return Versord(normal_quaternion()); }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gaugekit
