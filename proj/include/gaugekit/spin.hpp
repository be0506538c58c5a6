#pragma once

#include "gaugekit/clifford.hpp"

namespace gaugekit {

/// Spin(4) = SU(2) x SU(2) with componentwise product.
template <typename Scalar_>
struct Spin4Element {
  using Scalar = Scalar_;

  Versor<Scalar> u;
  Versor<Scalar> v;

  static Spin4Element Identity() { return {}; }
  static Spin4Element Diagonal(const Versor<Scalar>& d) { return {d, d}; }

  Spin4Element operator*(const Spin4Element& o) const { return {u * o.u, v * o.v}; }
  Spin4Element inverse() const { return {u.inverse(), v.inverse()}; }

  /// Distance as the larger of the two factor distances.
  Scalar distance(const Spin4Element& o) const { return std::max(u.angleTo(o.u), v.angleTo(o.v)); }

  Cl03<Scalar> toCl03() const { return Cl03<Scalar>(u.quaternion(), v.quaternion()); }
};

using Spin4d = Spin4Element<double>;

/// Spin(3) inside Cl(0,3): w e0 + x e1 + y e2 + z e3 over the even basis.
template <typename Scalar>
Cl03<Scalar> spin3_embed(const Versor<Scalar>& v) {
  return cl_even_basis<Scalar>(0) * v.w() + cl_even_basis<Scalar>(1) * v.x() + cl_even_basis<Scalar>(2) * v.y() +
         cl_even_basis<Scalar>(3) * v.z();
}

/// Spin(4) -> Spin(4)/Spin(3) = SU(2), (u, v) -> u v^-1. The kernel is the
/// diagonal copy of Spin(3).
template <typename Scalar>
Versor<Scalar> spin4_quotient(const Spin4Element<Scalar>& s) {
  return s.u * s.v.inverse();
}

/// Drops the radial factors of an invertible element.
template <typename Scalar>
Spin4Element<Scalar> spin4_part(const IclDecomposition<Scalar>& d) {
  return {d.v1, d.v2};
}

}  // namespace gaugekit
