#pragma once

#include <algorithm>
#include <array>
#include <ostream>
#include <string_view>

#include "gaugekit/quaternion.hpp"

namespace gaugekit {

/// Element of Cl(0,3) realized as a direct sum of two quaternions, a (+) b,
/// i.e. the block-diagonal matrix diag(a, b). The algebra product is
/// componentwise in the two summands.
template <typename Scalar_>
class Cl03 {
 public:
  using Scalar = Scalar_;
  using Quat = Quaternion<Scalar>;

  Cl03() = default;
  Cl03(const Quat& a, const Quat& b) : a_(a), b_(b) {}

  static Cl03 Zero() { return Cl03(); }
  static Cl03 Identity() { return Cl03(Quat::Identity(), Quat::Identity()); }
  static Cl03 Real(Scalar first, Scalar second) { return Cl03(Quat::Real(first), Quat::Real(second)); }

  const Quat& first() const { return a_; }
  const Quat& second() const { return b_; }

  Eigen::Matrix<Scalar, 8, 1> coeffs() const {
    Eigen::Matrix<Scalar, 8, 1> c;
    c << a_.coeffs(), b_.coeffs();
    return c;
  }

  Cl03 operator*(const Cl03& o) const { return Cl03(a_ * o.a_, b_ * o.b_); }
  Cl03 operator+(const Cl03& o) const { return Cl03(a_ + o.a_, b_ + o.b_); }
  Cl03 operator-(const Cl03& o) const { return Cl03(a_ - o.a_, b_ - o.b_); }
  Cl03 operator-() const { return Cl03(-a_, -b_); }
  Cl03 operator*(Scalar s) const { return Cl03(a_ * s, b_ * s); }
  friend Cl03 operator*(Scalar s, const Cl03& x) { return x * s; }

  bool operator==(const Cl03& o) const { return a_ == o.a_ && b_ == o.b_; }

  friend std::ostream& operator<<(std::ostream& os, const Cl03& x) { return os << x.a_ << " (+) " << x.b_; }

 private:
  Quat a_;
  Quat b_;
};

using Cl03d = Cl03<double>;

template <typename Scalar>
Cl03<Scalar> cl_mul(const Cl03<Scalar>& x, const Cl03<Scalar>& y) {
  return x * y;
}

/// Generators e1 = (-i)(+)i', e2 = (-j)(+)j', e3 = (-k)(+)k'.
template <typename Scalar = double>
Cl03<Scalar> cl_generator(int n) {
  using Q = Quaternion<Scalar>;
  switch (n) {
    case 1: return Cl03<Scalar>(-Q::UnitI(), Q::UnitI());
    case 2: return Cl03<Scalar>(-Q::UnitJ(), Q::UnitJ());
    case 3: return Cl03<Scalar>(-Q::UnitK(), Q::UnitK());
    default: throw Error(ErrorCode::IndexOutOfRange, "Clifford generator index must be 1..3");
  }
}

/// Basis of the even subalgebra: e0 = 1, and e_a = e_b e_c for (a, b, c) a
/// cyclic permutation of (1, 2, 3). With ij = k these evaluate to
/// i(+)i', j(+)j', k(+)k'.
template <typename Scalar = double>
Cl03<Scalar> cl_even_basis(int alpha) {
  switch (alpha) {
    case 0: return -(cl_generator<Scalar>(1) * cl_generator<Scalar>(1));
    case 1: return cl_generator<Scalar>(2) * cl_generator<Scalar>(3);
    case 2: return cl_generator<Scalar>(3) * cl_generator<Scalar>(1);
    case 3: return cl_generator<Scalar>(1) * cl_generator<Scalar>(2);
    default: throw Error(ErrorCode::IndexOutOfRange, "even basis index must be 0..3");
  }
}

inline constexpr std::array<std::string_view, 8> kBladeNames = {"1", "e1", "e2", "e3", "e12", "e23", "e31", "e123"};

/// The eight basis blades 1, e1, e2, e3, e1e2, e2e3, e3e1, e1e2e3.
template <typename Scalar = double>
Cl03<Scalar> cl_blade(int index) {
  const auto e = [](int n) { return cl_generator<Scalar>(n); };
  switch (index) {
    case 0: return Cl03<Scalar>::Identity();
    case 1: return e(1);
    case 2: return e(2);
    case 3: return e(3);
    case 4: return e(1) * e(2);
    case 5: return e(2) * e(3);
    case 6: return e(3) * e(1);
    case 7: return e(1) * e(2) * e(3);
    default: throw Error(ErrorCode::IndexOutOfRange, "blade index must be 0..7");
  }
}

/// Polar factors of an invertible element: r1 v1 (+) r2 v2.
template <typename Scalar>
struct IclDecomposition {
  Scalar r1;
  Versor<Scalar> v1;
  Scalar r2;
  Versor<Scalar> v2;

  Cl03<Scalar> recompose() const { return Cl03<Scalar>(v1.quaternion() * r1, v2.quaternion() * r2); }
};

inline constexpr double kInvertibilityRelativeEpsilon = 1e-12;

/// An element is invertible when neither summand vanishes. A summand counts as
/// vanishing below the absolute zero epsilon or below `relative_eps` times the
/// larger summand norm.
template <typename Scalar>
bool is_invertible(const Cl03<Scalar>& x, Scalar relative_eps = Scalar(kInvertibilityRelativeEpsilon)) {
  const Scalar na = x.first().stableNorm();
  const Scalar nb = x.second().stableNorm();
  const Scalar scale = std::max(na, nb);
  const Scalar floor = std::max(Scalar(kZeroQuaternionEpsilon), relative_eps * scale);
  return na > floor && nb > floor;
}

template <typename Scalar>
IclDecomposition<Scalar> icl_decompose(const Cl03<Scalar>& x,
                                       Scalar relative_eps = Scalar(kInvertibilityRelativeEpsilon)) {
  if (!is_invertible(x, relative_eps)) throw Error(ErrorCode::NotInvertible, "Cl(0,3) element has a vanishing summand");
  const auto pa = quat_polar(x.first());
  const auto pb = quat_polar(x.second());
  return {pa.radius, pa.direction, pb.radius, pb.direction};
}

}  // namespace gaugekit
