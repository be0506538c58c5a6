#pragma once

#include <cmath>
#include <limits>
#include <ostream>

#include <Eigen/Core>

#include "gaugekit/error.hpp"

namespace gaugekit {

/// Real quaternion w + x i + y j + z k with Hamilton product (ij = k).
///
/// Coefficients are stored as an Eigen 4-vector in (w, x, y, z) order, so the
/// linear part of the algebra (sums, scaling, dot products) is plain Eigen
/// arithmetic and only the product is spelled out.
template <typename Scalar_>
class Quaternion {
 public:
  using Scalar = Scalar_;
  using Coefficients = Eigen::Matrix<Scalar, 4, 1>;
  using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

  Quaternion() : coeffs_(Coefficients::Zero()) {}
  Quaternion(Scalar w, Scalar x, Scalar y, Scalar z) : coeffs_(w, x, y, z) {}
  template <typename Derived>
  explicit Quaternion(const Eigen::MatrixBase<Derived>& coeffs) : coeffs_(coeffs) {}

  static Quaternion Zero() { return Quaternion(); }
  static Quaternion Identity() { return Quaternion(1, 0, 0, 0); }
  static Quaternion UnitI() { return Quaternion(0, 1, 0, 0); }
  static Quaternion UnitJ() { return Quaternion(0, 0, 1, 0); }
  static Quaternion UnitK() { return Quaternion(0, 0, 0, 1); }
  static Quaternion Real(Scalar s) { return Quaternion(s, 0, 0, 0); }
  /// Imaginary quaternion x i + y j + z k.
  static Quaternion Pure(const Vector3& v) { return Quaternion(0, v.x(), v.y(), v.z()); }

  Scalar w() const { return coeffs_[0]; }
  Scalar x() const { return coeffs_[1]; }
  Scalar y() const { return coeffs_[2]; }
  Scalar z() const { return coeffs_[3]; }
  Vector3 vec() const { return coeffs_.template tail<3>(); }

  const Coefficients& coeffs() const { return coeffs_; }
  Coefficients& coeffs() { return coeffs_; }

  Quaternion conjugate() const { return Quaternion(w(), -x(), -y(), -z()); }
  Scalar squaredNorm() const { return coeffs_.squaredNorm(); }
  Scalar norm() const { return coeffs_.norm(); }
  /// Overflow/underflow-safe norm, for inputs far from unit scale.
  Scalar stableNorm() const { return coeffs_.stableNorm(); }
  Scalar dot(const Quaternion& o) const { return coeffs_.dot(o.coeffs_); }

  Quaternion inverse() const {
    const Scalar n2 = squaredNorm();
    if (!(n2 > Scalar(0))) throw Error(ErrorCode::ZeroQuaternion, "inverse of zero quaternion");
    return Quaternion(Coefficients(conjugate().coeffs_ / n2));
  }

  Quaternion operator*(const Quaternion& o) const {
    return Quaternion(w() * o.w() - x() * o.x() - y() * o.y() - z() * o.z(),
                      w() * o.x() + x() * o.w() + y() * o.z() - z() * o.y(),
                      w() * o.y() - x() * o.z() + y() * o.w() + z() * o.x(),
                      w() * o.z() + x() * o.y() - y() * o.x() + z() * o.w());
  }
  Quaternion operator+(const Quaternion& o) const { return Quaternion(Coefficients(coeffs_ + o.coeffs_)); }
  Quaternion operator-(const Quaternion& o) const { return Quaternion(Coefficients(coeffs_ - o.coeffs_)); }
  Quaternion operator-() const { return Quaternion(Coefficients(-coeffs_)); }
  Quaternion operator*(Scalar s) const { return Quaternion(Coefficients(coeffs_ * s)); }
  Quaternion operator/(Scalar s) const { return Quaternion(Coefficients(coeffs_ / s)); }
  friend Quaternion operator*(Scalar s, const Quaternion& q) { return q * s; }

  Quaternion& operator+=(const Quaternion& o) { coeffs_ += o.coeffs_; return *this; }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  bool operator==(const Quaternion& o) const { return coeffs_ == o.coeffs_; }

  bool isApprox(const Quaternion& o, Scalar prec = Eigen::NumTraits<Scalar>::dummy_precision()) const {
    return coeffs_.isApprox(o.coeffs_, prec);
  }

  template <typename NewScalar>
  Quaternion<NewScalar> cast() const {
    return Quaternion<NewScalar>(coeffs_.template cast<NewScalar>().eval());
  }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.w() << ", " << q.x() << ", " << q.y() << ", " << q.z() << ")";
  }

 private:
  Coefficients coeffs_;
};

using Quaterniond = Quaternion<double>;

template <typename Scalar>
Quaternion<Scalar> quat_mul(const Quaternion<Scalar>& a, const Quaternion<Scalar>& b) {
  return a * b;
}

/// Unit quaternion, i.e. an element of SU(2) = Spin(3).
///
/// Every constructor and product renormalizes, so |norm - 1| stays at
/// rounding level no matter how long a product chain gets.
template <typename Scalar_>
class Versor {
 public:
  using Scalar = Scalar_;
  using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

  Versor() : q_(Quaternion<Scalar>::Identity()) {}
  /// Normalizes `q`; throws ZeroQuaternion when it has no direction.
  explicit Versor(const Quaternion<Scalar>& q) : q_(normalized(q)) {}
  Versor(Scalar w, Scalar x, Scalar y, Scalar z) : Versor(Quaternion<Scalar>(w, x, y, z)) {}

  static Versor Identity() { return Versor(); }

  /// exp(angle * axis) = cos(angle) + sin(angle) axis, axis a unit 3-vector.
  static Versor Exp(const Vector3& axis, Scalar angle) {
    const Vector3 n = axis.normalized();
    return Versor(Quaternion<Scalar>(std::cos(angle), std::sin(angle) * n.x(), std::sin(angle) * n.y(),
                                     std::sin(angle) * n.z()));
  }

  /// exp of an imaginary quaternion given by its 3-vector part.
  static Versor Exp(const Vector3& v) {
    const Scalar theta = v.norm();
    if (theta == Scalar(0)) return Identity();
    return Exp(v / theta, theta);
  }

  /// Rotation by `angle` about `axis` in the double-cover convention.
  static Versor FromAxisAngle(const Vector3& axis, Scalar angle) { return Exp(axis, angle / 2); }

  const Quaternion<Scalar>& quaternion() const { return q_; }
  Scalar w() const { return q_.w(); }
  Scalar x() const { return q_.x(); }
  Scalar y() const { return q_.y(); }
  Scalar z() const { return q_.z(); }

  Versor inverse() const { return fromUnit(q_.conjugate()); }
  Versor operator*(const Versor& o) const { return Versor(q_ * o.q_); }
  Versor operator-() const { return fromUnit(-q_); }
  Versor& operator*=(const Versor& o) { return *this = *this * o; }
  bool operator==(const Versor& o) const { return q_ == o.q_; }

  /// Great-circle angle to `o` on S^3, in [0, pi].
  Scalar angleTo(const Versor& o) const {
    const Scalar diff = (q_ - o.q_).norm();
    const Scalar sum = (q_ + o.q_).norm();
    return 2 * std::atan2(diff, sum);
  }

  /// Imaginary 3-vector v with exp(v) = *this and |v| <= pi.
  Vector3 log() const {
    const Scalar s = q_.vec().norm();
    if (s == Scalar(0)) return Vector3::Zero();
    return q_.vec() * (std::atan2(s, q_.w()) / s);
  }

  /// Conjugation action q v q^-1 on 3-vectors (the adjoint representation).
  Vector3 rotate(const Vector3& v) const { return (q_ * Quaternion<Scalar>::Pure(v) * q_.conjugate()).vec(); }

  /// Geodesic interpolation on S^3; undefined for antipodal endpoints.
  Versor slerp(const Versor& to, Scalar t) const {
    const Scalar omega = angleTo(to);
    if (omega < Scalar(1e-12)) return Versor(q_ * (1 - t) + to.q_ * t);
    const Scalar s = std::sin(omega);
    return Versor(q_ * (std::sin((1 - t) * omega) / s) + to.q_ * (std::sin(t * omega) / s));
  }

  friend std::ostream& operator<<(std::ostream& os, const Versor& v) { return os << v.q_; }

 private:
  static Versor fromUnit(const Quaternion<Scalar>& q) {
    Versor v;
    v.q_ = q;
    return v;
  }
  static Quaternion<Scalar> normalized(const Quaternion<Scalar>& q) {
    const Scalar n = q.norm();
    if (!(n > std::numeric_limits<Scalar>::min())) throw Error(ErrorCode::ZeroQuaternion, "cannot normalize zero quaternion");
    return q / n;
  }

  Quaternion<Scalar> q_;
};

using Versord = Versor<double>;

/// Factorization q = radius * direction with radius > 0.
template <typename Scalar>
struct PolarForm {
  Scalar radius;
  Versor<Scalar> direction;

  Quaternion<Scalar> recompose() const { return direction.quaternion() * radius; }
};

inline constexpr double kZeroQuaternionEpsilon = 1e-300;

template <typename Scalar>
PolarForm<Scalar> quat_polar(const Quaternion<Scalar>& q, Scalar epsilon = Scalar(kZeroQuaternionEpsilon)) {
  const Scalar n = q.stableNorm();
  if (!(n > epsilon)) throw Error(ErrorCode::ZeroQuaternion, "polar decomposition of a zero quaternion");
  return {n, Versor<Scalar>(q / n)};
}

}  // namespace gaugekit
