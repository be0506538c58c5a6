#pragma once

#include <complex>
#include <string_view>
#include <variant>

#include <Eigen/Core>

#include "gaugekit/quaternion.hpp"

namespace gaugekit {

enum class GroupKind { U1, SU2 };

std::string_view to_string(GroupKind kind);
GroupKind group_kind_from_string(std::string_view name);

/// Angle in (-pi, pi].
double wrap_phase(double theta);

struct U1Phase {
  double theta = 0;
};

/// Value of a transporter: a U(1) phase or an SU(2) versor.
///
/// Both embed in the quaternions (U(1) as cos t + i sin t), which is how the
/// integrators treat them uniformly.
class GroupElement {
 public:
  GroupElement() : value_(U1Phase{}) {}
  GroupElement(U1Phase p) : value_(U1Phase{wrap_phase(p.theta)}) {}
  GroupElement(const Versord& v) : value_(v) {}

  static GroupElement identity(GroupKind kind);
  static GroupElement phase(double theta) { return GroupElement(U1Phase{theta}); }
  /// Projects a nonzero quaternion onto the group of the given kind.
  static GroupElement from_quaternion(GroupKind kind, const Quaterniond& q);

  GroupKind kind() const { return std::holds_alternative<U1Phase>(value_) ? GroupKind::U1 : GroupKind::SU2; }
  double theta() const;
  const Versord& versor() const;
  Quaterniond as_quaternion() const;

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;

 private:
  std::variant<U1Phase, Versord> value_;
};

/// Bi-invariant distance: |wrap(t_g - t_h)| for U(1), the S^3 great-circle
/// angle for SU(2). Both lie in [0, pi]. Throws TypeMismatch across kinds.
double distance(const GroupElement& g, const GroupElement& h);

/// Fundamental representation: the 2x2 unitary of a versor, or the 1x1 phase
/// (embedded in the top-left entry) for U(1).
Eigen::Matrix2cd fundamental_matrix(const GroupElement& g);
/// Re tr / dim of the fundamental representation; 1 at the identity.
double normalized_real_trace(const GroupElement& g);

}  // namespace gaugekit
