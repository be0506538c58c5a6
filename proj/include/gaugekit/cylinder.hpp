#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "gaugekit/bundle.hpp"
#include "gaugekit/connection.hpp"
#include "gaugekit/gauge.hpp"

namespace gaugekit {

enum class ExprKind { Slot, Product, Inverse, RealTrace, Constant, Sum, ScalarProduct };
enum class ExprType { Group, Scalar };

/// Expression tree for psi. Immutable; subtrees are shared.
class CylinderExpr {
 public:
  /// Transporter of path `index`, 1-based.
  static CylinderExpr slot(int index);
  static CylinderExpr product(const CylinderExpr& a, const CylinderExpr& b);
  static CylinderExpr inverse(const CylinderExpr& a);
  /// Re tr / 2 of the fundamental 2x2 matrix (SU(2)), cos theta (U(1)).
  static CylinderExpr real_trace(const CylinderExpr& a);
  static CylinderExpr constant(double c);
  static CylinderExpr sum(const CylinderExpr& a, const CylinderExpr& b);
  static CylinderExpr scalar_product(const CylinderExpr& a, const CylinderExpr& b);

  ExprKind kind() const { return node_->kind; }
  int index() const { return node_->index; }
  double value() const { return node_->value; }
  const CylinderExpr& lhs() const { return *node_->lhs; }
  const CylinderExpr& rhs() const { return *node_->rhs; }

  /// Type of the tree for `slots` paths. Throws TypeMismatch or
  /// IndexOutOfRange.
  ExprType type(std::size_t slots) const;

 private:
  struct Node {
    ExprKind kind;
    int index = 0;
    double value = 0;
    std::shared_ptr<const CylinderExpr> lhs, rhs;
  };
  explicit CylinderExpr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

  std::shared_ptr<const Node> node_;
};

using ExprValue = std::variant<GroupElement, double>;

/// Folds the tree over slot values.
ExprValue fold(const CylinderExpr& expr, std::span<const GroupElement> slots);

struct CylinderSpec {
  std::vector<Path> paths;
  CylinderExpr expr;
};

/// Psi(A). Slots are transporters; with a reference connection they are
/// compare_connections(conn, reference) instead. Throws TypeMismatch unless
/// the root is a scalar.
double evaluate_cylinder(const CylinderSpec& spec, const ConnectionForm& conn, const PrincipalBundle& bundle, int steps,
                         const std::optional<ConnectionForm>& reference = std::nullopt);

/// |Psi(A^g) - Psi(A)| for one gauge transformation; any paths.
double gauge_deviation(const CylinderSpec& spec, const ConnectionForm& conn, const PrincipalBundle& bundle,
                       const GaugeTransformation& g, int steps);

/// max |Psi(A^g) - Psi(A)| over `trials` random smooth gauges drawn from
/// `seed`. Throws OpenPathInInvarianceTest when a slot path is open.
double gauge_invariance_test(const CylinderSpec& spec, const ConnectionForm& conn, const PrincipalBundle& bundle,
                             int trials, std::uint64_t seed, int steps);

}  // namespace gaugekit
