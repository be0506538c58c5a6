#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gaugekit/cylinder.hpp"
#include "gaugekit/gauge.hpp"
#include "gaugekit/manifold.hpp"
#include "gaugekit/transport.hpp"
#include "support.hpp"

using namespace gaugekit;
using E = CylinderExpr;

namespace {

const PrincipalBundle kFlatSU2 = PrincipalBundle::trivial(Manifold::flat(), GroupKind::SU2);

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

// Closed random polygon through `base`.
Path loop_at(Rng& rng, const ChartPoint& base, int vertices) {
  std::vector<ChartPoint> pts{base};
  for (int k = 1; k < vertices; ++k) pts.push_back({Chart::Flat, {rng.uniform(-1, 1), rng.uniform(-1, 1)}});
  pts.push_back(base);
  return Path(pts);
}

double as_scalar(const ExprValue& v) { return std::get<double>(v); }

}  // namespace

TEST(CylinderExpr, Types) {
  EXPECT_EQ(E::slot(1).type(1), ExprType::Group);
  EXPECT_EQ(E::real_trace(E::product(E::slot(1), E::inverse(E::slot(2)))).type(2), ExprType::Scalar);
  EXPECT_EQ(E::sum(E::constant(1), E::real_trace(E::slot(1))).type(1), ExprType::Scalar);
  EXPECT_EQ(code_of([] { E::slot(3).type(2); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { E::slot(0).type(2); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { E::real_trace(E::constant(2)).type(0); }), ErrorCode::TypeMismatch);
  EXPECT_EQ(code_of([] { E::product(E::slot(1), E::constant(2)).type(1); }), ErrorCode::TypeMismatch);
  EXPECT_EQ(code_of([] { E::sum(E::slot(1), E::constant(2)).type(1); }), ErrorCode::TypeMismatch);
  EXPECT_EQ(code_of([] { E::inverse(E::constant(2)).type(0); }), ErrorCode::TypeMismatch);
}

TEST(CylinderExpr, FoldExamples) {
  const GroupElement k(Versord(Quaterniond::UnitK()));
  const std::vector<GroupElement> slots{k, k};
  EXPECT_EQ(as_scalar(fold(E::real_trace(E::slot(1)), slots)), 0.0);
  EXPECT_EQ(as_scalar(fold(E::real_trace(E::product(E::slot(1), E::slot(2))), slots)), -1.0);
  EXPECT_EQ(as_scalar(fold(E::real_trace(E::product(E::slot(1), E::inverse(E::slot(2)))), slots)), 1.0);
  EXPECT_EQ(as_scalar(fold(E::scalar_product(E::constant(3), E::sum(E::constant(1), E::constant(0.5))), slots)), 4.5);
  const std::vector<GroupElement> phase{GroupElement::phase(std::numbers::pi / 3)};
  EXPECT_NEAR(as_scalar(fold(E::real_trace(E::slot(1)), phase)), 0.5, 1e-15);
}

TEST(CylinderExpr, Linearity) {
  Rng rng(60);
  for (int t = 0; t < 50; ++t) {
    const std::vector<GroupElement> slots{GroupElement(rng.versor()), GroupElement(rng.versor())};
    const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
    const E p1 = E::real_trace(E::slot(1)), p2 = E::real_trace(E::product(E::slot(1), E::slot(2)));
    const E combo = E::sum(E::scalar_product(E::constant(a), p1), E::scalar_product(E::constant(b), p2));
    EXPECT_NEAR(as_scalar(fold(combo, slots)), a * as_scalar(fold(p1, slots)) + b * as_scalar(fold(p2, slots)), 1e-14);
  }
}

TEST(Cylinder, MonopoleWilsonLoop) {
  const auto b = PrincipalBundle::monopole(GroupKind::U1, 1);
  const CylinderSpec spec{{latitude_loop(std::numbers::pi / 2)}, E::real_trace(E::slot(1))};
  EXPECT_NEAR(evaluate_cylinder(spec, ConnectionForm::monopole(GroupKind::U1, 1), b, 10000), -1.0, 1e-12);
  const CylinderSpec group_root{{latitude_loop(1.0)}, E::slot(1)};
  EXPECT_EQ(code_of([&] { evaluate_cylinder(group_root, ConnectionForm::monopole(GroupKind::U1, 1), b, 100); }),
            ErrorCode::TypeMismatch);
}

TEST(Cylinder, ReferenceConnection) {
  const auto a = ConnectionForm::random_smooth(GroupKind::SU2, 61);
  Rng rng(62);
  const ChartPoint base{Chart::Flat, {0.1, 0.1}};
  const CylinderSpec spec{{loop_at(rng, base, 4)}, E::real_trace(E::slot(1))};
  EXPECT_NEAR(evaluate_cylinder(spec, a, kFlatSU2, 5000, canonical_flat(kFlatSU2)), evaluate_cylinder(spec, a, kFlatSU2, 5000),
              1e-12);
  EXPECT_NEAR(evaluate_cylinder(spec, a, kFlatSU2, 5000, a), 1.0, 1e-12);
}

TEST(Cylinder, ReparametrizationInvariant) {
  const auto a = ConnectionForm::random_smooth(GroupKind::SU2, 63);
  Rng rng(64);
  const ChartPoint base{Chart::Flat, {-0.3, 0.2}};
  const Path l1 = loop_at(rng, base, 4), l2 = loop_at(rng, base, 3);
  const E psi = E::real_trace(E::product(E::slot(1), E::slot(2)));
  const CylinderSpec spec{{l1, l2}, psi};
  const auto f = [](double s) { return s * s; };
  const CylinderSpec moved{{path_reparametrize(l1, f, 40), path_reparametrize(l2, f, 40)}, psi};
  EXPECT_NEAR(evaluate_cylinder(spec, a, kFlatSU2, 10000), evaluate_cylinder(moved, a, kFlatSU2, 10000), 1e-7);
}

TEST(Cylinder, GaugeInvariantOnLoops) {
  const auto a = ConnectionForm::random_smooth(GroupKind::SU2, 65);
  Rng rng(66);
  const ChartPoint base{Chart::Flat, {0.4, -0.2}};
  const CylinderSpec spec{{loop_at(rng, base, 4), loop_at(rng, base, 4)},
                          E::sum(E::real_trace(E::product(E::slot(1), E::inverse(E::slot(2)))),
                                 E::scalar_product(E::constant(0.5), E::real_trace(E::slot(1))))};
  EXPECT_LE(gauge_invariance_test(spec, a, kFlatSU2, 10, 67, 10000), 1e-8);

  const auto b = PrincipalBundle::monopole(GroupKind::SU2, 1);
  const auto s = ConnectionForm::random_sphere(GroupKind::SU2, 1, 68);
  const CylinderSpec sphere_spec{{latitude_loop(2.0, 64, 0.5)}, E::real_trace(E::slot(1))};
  EXPECT_LE(gauge_invariance_test(sphere_spec, s, b, 5, 69, 10000), 1e-8);
}

TEST(Cylinder, OpenPathsAreNotInvariant) {
  const auto a = ConnectionForm::random_smooth(GroupKind::SU2, 70);
  Rng rng(71);
  const CylinderSpec spec{{oracle::random_flat_path(rng, 4)}, E::real_trace(E::slot(1))};
  EXPECT_GT(gauge_deviation(spec, a, kFlatSU2, GaugeTransformation::random_flat(GroupKind::SU2, 72), 10000), 1e-3);
  EXPECT_EQ(code_of([&] { gauge_invariance_test(spec, a, kFlatSU2, 3, 0, 100); }), ErrorCode::OpenPathInInvarianceTest);
}
