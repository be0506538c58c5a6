#include "gaugekit/group_element.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gaugekit {

std::string_view to_string(GroupKind kind) { return kind == GroupKind::U1 ? "U1" : "SU2"; }

GroupKind group_kind_from_string(std::string_view name) {
  if (name == "U1") return GroupKind::U1;
  if (name == "SU2") return GroupKind::SU2;
  throw Error(ErrorCode::SchemaViolation, "unknown group '" + std::string(name) + "'");
}

double wrap_phase(double theta) {
  double a = std::remainder(theta, 2 * std::numbers::pi);
  if (a <= -std::numbers::pi) a += 2 * std::numbers::pi;
  return a;
}

GroupElement GroupElement::identity(GroupKind kind) {
  return kind == GroupKind::U1 ? GroupElement(U1Phase{0}) : GroupElement(Versord::Identity());
}

GroupElement GroupElement::from_quaternion(GroupKind kind, const Quaterniond& q) {
  if (kind == GroupKind::U1) {
    if (!(std::hypot(q.w(), q.x()) > 0)) throw Error(ErrorCode::ZeroQuaternion, "no phase for a zero complex number");
    return phase(std::atan2(q.x(), q.w()));
  }
  return GroupElement(Versord(q));
}

double GroupElement::theta() const {
  if (const auto* p = std::get_if<U1Phase>(&value_)) return p->theta;
  throw Error(ErrorCode::TypeMismatch, "SU(2) element has no phase");
}

const Versord& GroupElement::versor() const {
  if (const auto* v = std::get_if<Versord>(&value_)) return *v;
  throw Error(ErrorCode::TypeMismatch, "U(1) element is not a versor");
}

Quaterniond GroupElement::as_quaternion() const {
  if (const auto* p = std::get_if<U1Phase>(&value_)) return Quaterniond(std::cos(p->theta), std::sin(p->theta), 0, 0);
  return std::get<Versord>(value_).quaternion();
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (kind() != o.kind()) throw Error(ErrorCode::TypeMismatch, "product of U(1) and SU(2) elements");
  if (kind() == GroupKind::U1) return phase(theta() + o.theta());
  return GroupElement(versor() * o.versor());
}

GroupElement GroupElement::inverse() const {
  if (kind() == GroupKind::U1) return phase(-theta());
  return GroupElement(versor().inverse());
}

double distance(const GroupElement& g, const GroupElement& h) {
  if (g.kind() != h.kind()) throw Error(ErrorCode::TypeMismatch, "distance between U(1) and SU(2) elements");
  if (g.kind() == GroupKind::U1) return std::abs(wrap_phase(g.theta() - h.theta()));
  return g.versor().angleTo(h.versor());
}

Eigen::Matrix2cd fundamental_matrix(const GroupElement& g) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  if (g.kind() == GroupKind::U1) {
    m(0, 0) = std::polar(1.0, g.theta());
    return m;
  }
  // i, j, k -> -i sigma_1, -i sigma_2, -i sigma_3, which keeps ij = k.
  const auto& q = g.versor();
  m << C(q.w(), -q.z()), C(-q.y(), -q.x()), C(q.y(), -q.x()), C(q.w(), q.z());
  return m;
}

double normalized_real_trace(const GroupElement& g) {
  const auto m = fundamental_matrix(g);
  return g.kind() == GroupKind::U1 ? m(0, 0).real() : m.trace().real() / 2;
}

}  // namespace gaugekit
