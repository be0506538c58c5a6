#include "gaugekit/cylinder.hpp"

#include <algorithm>
#include <cmath>

#include "gaugekit/transport.hpp"

namespace gaugekit {

CylinderExpr CylinderExpr::slot(int index) { return CylinderExpr(Node{ExprKind::Slot, index, 0, nullptr, nullptr}); }

CylinderExpr CylinderExpr::product(const CylinderExpr& a, const CylinderExpr& b) {
  return CylinderExpr(
      Node{ExprKind::Product, 0, 0, std::make_shared<const CylinderExpr>(a), std::make_shared<const CylinderExpr>(b)});
}

CylinderExpr CylinderExpr::inverse(const CylinderExpr& a) {
  return CylinderExpr(Node{ExprKind::Inverse, 0, 0, std::make_shared<const CylinderExpr>(a), nullptr});
}

CylinderExpr CylinderExpr::real_trace(const CylinderExpr& a) {
  return CylinderExpr(Node{ExprKind::RealTrace, 0, 0, std::make_shared<const CylinderExpr>(a), nullptr});
}

CylinderExpr CylinderExpr::constant(double c) { return CylinderExpr(Node{ExprKind::Constant, 0, c, nullptr, nullptr}); }

CylinderExpr CylinderExpr::sum(const CylinderExpr& a, const CylinderExpr& b) {
  return CylinderExpr(
      Node{ExprKind::Sum, 0, 0, std::make_shared<const CylinderExpr>(a), std::make_shared<const CylinderExpr>(b)});
}

CylinderExpr CylinderExpr::scalar_product(const CylinderExpr& a, const CylinderExpr& b) {
  return CylinderExpr(Node{ExprKind::ScalarProduct, 0, 0, std::make_shared<const CylinderExpr>(a),
                           std::make_shared<const CylinderExpr>(b)});
}

ExprType CylinderExpr::type(std::size_t slots) const {
  const auto need = [slots](const CylinderExpr& e, ExprType t, const char* what) {
    if (e.type(slots) != t) throw Error(ErrorCode::TypeMismatch, what);
  };
  switch (kind()) {
    case ExprKind::Slot:
      if (index() < 1 || std::size_t(index()) > slots) {
        throw Error(ErrorCode::IndexOutOfRange, "slot " + std::to_string(index()) + " of " + std::to_string(slots));
      }
      return ExprType::Group;
    case ExprKind::Product:
      need(lhs(), ExprType::Group, "product of non-group values");
      need(rhs(), ExprType::Group, "product of non-group values");
      return ExprType::Group;
    case ExprKind::Inverse:
      need(lhs(), ExprType::Group, "inverse of a scalar");
      return ExprType::Group;
    case ExprKind::RealTrace:
      need(lhs(), ExprType::Group, "trace of a scalar");
      return ExprType::Scalar;
    case ExprKind::Constant:
      return ExprType::Scalar;
    case ExprKind::Sum:
    case ExprKind::ScalarProduct:
      need(lhs(), ExprType::Scalar, "arithmetic on group values");
      need(rhs(), ExprType::Scalar, "arithmetic on group values");
      return ExprType::Scalar;
  }
  throw Error(ErrorCode::SchemaViolation, "unknown expression node");
}

ExprValue fold(const CylinderExpr& expr, std::span<const GroupElement> slots) {
  const auto group = [&](const CylinderExpr& e) { return std::get<GroupElement>(fold(e, slots)); };
  const auto scalar = [&](const CylinderExpr& e) { return std::get<double>(fold(e, slots)); };
  switch (expr.kind()) {
    case ExprKind::Slot:
      return slots[std::size_t(expr.index() - 1)];
    case ExprKind::Product:
      return group(expr.lhs()) * group(expr.rhs());
    case ExprKind::Inverse:
      return group(expr.lhs()).inverse();
    case ExprKind::RealTrace:
      return normalized_real_trace(group(expr.lhs()));
    case ExprKind::Constant:
      return expr.value();
    case ExprKind::Sum:
      return scalar(expr.lhs()) + scalar(expr.rhs());
    case ExprKind::ScalarProduct:
      return scalar(expr.lhs()) * scalar(expr.rhs());
  }
  throw Error(ErrorCode::SchemaViolation, "unknown expression node");
}

double evaluate_cylinder(const CylinderSpec& spec, const ConnectionForm& conn, const PrincipalBundle& bundle, int steps,
                         const std::optional<ConnectionForm>& reference) {
  if (spec.expr.type(spec.paths.size()) != ExprType::Scalar) {
    throw Error(ErrorCode::TypeMismatch, "cylinder function root must be a scalar");
  }
  std::vector<GroupElement> slots;
  if (reference) {
    for (const Path& p : spec.paths) slots.push_back(compare_connections(conn, *reference, bundle, p, steps));
  } else {
    slots = transport_all(conn, bundle, spec.paths, steps);
  }
  return std::get<double>(fold(spec.expr, slots));
}

double gauge_deviation(const CylinderSpec& spec, const ConnectionForm& conn, const PrincipalBundle& bundle,
                       const GaugeTransformation& g, int steps) {
  const double before = evaluate_cylinder(spec, conn, bundle, steps);
  const double after = evaluate_cylinder(spec, gauge_transform(conn, bundle, g), bundle, steps);
  return std::abs(after - before);
}

double gauge_invariance_test(const CylinderSpec& spec, const ConnectionForm& conn, const PrincipalBundle& bundle,
                             int trials, std::uint64_t seed, int steps) {
  for (std::size_t k = 0; k < spec.paths.size(); ++k) {
    if (!spec.paths[k].is_closed(kEndpointTolerance)) {
      throw Error(ErrorCode::OpenPathInInvarianceTest,
                  "slot " + std::to_string(k + 1) + " is an open path; its value depends on the trivialization");
    }
  }
  const double before = evaluate_cylinder(spec, conn, bundle, steps);
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    const GaugeTransformation g = GaugeTransformation::random_for(bundle, seed + std::uint64_t(t));
    const double after = evaluate_cylinder(spec, gauge_transform(conn, bundle, g), bundle, steps);
    worst = std::max(worst, std::abs(after - before));
  }
  return worst;
}

}  // namespace gaugekit
