#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gaugekit/contraction.hpp"
#include "gaugekit/gauge.hpp"
#include "gaugekit/manifold.hpp"
#include "gaugekit/transport.hpp"
#include "gaugekit/triviality.hpp"
#include "support.hpp"

using namespace gaugekit;
using std::numbers::pi;

namespace {

ChartPoint flat(double x, double y) { return {Chart::Flat, {x, y}}; }

const PrincipalBundle kFlatU1 = PrincipalBundle::trivial(Manifold::flat(), GroupKind::U1);
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

double solid_angle_phase(int n, double theta) { return wrap_phase(-n * pi * (1 - std::cos(theta))); }

// Meridian-like path from colatitude t0 to t1 at azimuth phi, all in North
// coordinates.
Path north_meridian(double t0, double t1, double phi, int samples) {
  std::vector<ChartPoint> pts;
  for (int k = 0; k < samples; ++k) {
    const double t = t0 + (t1 - t0) * k / (samples - 1);
    pts.push_back(sphere_point(t, phi + 0.3 * std::sin(3 * t), Chart::North));
  }
  return Path(pts);
}

}  // namespace

TEST(GroupElement, DistanceAndWrap) {
  EXPECT_EQ(wrap_phase(pi), pi);
  EXPECT_EQ(wrap_phase(-pi), pi);
  EXPECT_NEAR(distance(GroupElement::phase(0.1), GroupElement::phase(2 * pi - 0.1)), 0.2, 1e-15);
  const GroupElement minus_one(Versord(-1, 0, 0, 0));
  EXPECT_NEAR(distance(minus_one, GroupElement::identity(GroupKind::SU2)), pi, 1e-15);
  EXPECT_EQ(code_of([&] { distance(minus_one, GroupElement::phase(0)); }), ErrorCode::TypeMismatch);
}

TEST(GroupElement, FundamentalRepresentationIsHomomorphism) {
  Rng rng(20);
  for (int t = 0; t < 50; ++t) {
    const GroupElement a(rng.versor()), b(rng.versor());
    EXPECT_LE((fundamental_matrix(a * b) - fundamental_matrix(a) * fundamental_matrix(b)).norm(), 1e-14);
    EXPECT_NEAR(normalized_real_trace(a), fundamental_matrix(a).trace().real() / 2, 1e-15);
  }
  EXPECT_EQ(normalized_real_trace(GroupElement::phase(pi)), -1.0);
}

TEST(Bundle, CocycleAndWinding) {
  for (int n = -5; n <= 5; ++n) {
    const auto b = PrincipalBundle::monopole(GroupKind::U1, n);
    EXPECT_LE(b.cocycle_residual(), 1e-12);
    EXPECT_EQ(equator_winding(b), n);
  }
  std::vector<GroupElement> table;
  for (int k = 0; k < 32; ++k) table.push_back(GroupElement::phase(-3 * 2 * pi * k / 32));
  EXPECT_EQ(equator_winding(PrincipalBundle::sphere(GroupKind::U1, TransitionFunction::sampled(GroupKind::U1, table))), -3);
  const std::vector<GroupElement> constant(8, GroupElement::phase(0.4));
  EXPECT_EQ(equator_winding(PrincipalBundle::sphere(GroupKind::U1, TransitionFunction::sampled(GroupKind::U1, constant))), 0);
  EXPECT_EQ(code_of([] { equator_winding(PrincipalBundle::monopole(GroupKind::SU2, 1)); }), ErrorCode::NotApplicable);
  EXPECT_EQ(code_of([] { equator_winding(kFlatU1); }), ErrorCode::NotApplicable);
}

TEST(Transport, ZeroConnectionIsIdentity) {
  Rng rng(21);
  const Path p = oracle::random_flat_path(rng, 6);
  EXPECT_EQ(distance(transport(ConnectionForm::zero(GroupKind::SU2), kFlatSU2, p, 100), GroupElement::identity(GroupKind::SU2)), 0.0);
  EXPECT_EQ(transport(ConnectionForm::zero(GroupKind::U1), kFlatU1, p, 100).theta(), 0.0);
}

TEST(Transport, ConstantU1Form) {
  const double c = 0.7, L = 1.3;
  FormValue v = FormValue::Zero();
  v(0, 0) = c;
  const Path p({flat(0.1, 0.2), flat(0.1 + L, 0.2)});
  const GroupElement t = transport(ConnectionForm::constant(GroupKind::U1, v), kFlatU1, p, 10000);
  EXPECT_NEAR(distance(t, GroupElement::phase(-c * L)), 0, 1e-13);
}

TEST(Transport, ConstantSU2Form) {
  FormValue v = FormValue::Zero();
  v.col(0) << 3, 0, -1;
  v.col(1) << 0, 2, 0;
  const Path p({flat(0, 0), flat(1, 0)});
  const GroupElement t = transport(ConnectionForm::constant(GroupKind::SU2, v), kFlatSU2, p, 10000);
  EXPECT_LE(distance(t, GroupElement(Versord::Exp(Eigen::Vector3d(-3, 0, 1)))), 1e-12);
}

TEST(Transport, ConstantCoefficientConvergenceOrder) {
  FormValue v = FormValue::Zero();
  v(0, 0) = 30;
  const Path p({flat(0, 0), flat(1, 0)});
  const auto conn = ConnectionForm::constant(GroupKind::U1, v);
  std::vector<double> steps{100, 1000, 10000}, errors;
  for (double s : steps) errors.push_back(distance(transport(conn, kFlatU1, p, int(s)), GroupElement::phase(-30)));
  EXPECT_GE(oracle::loglog_slope(steps, errors), 3.7);
}

TEST(Transport, MonopoleHolonomy) {
  for (int n : {1, 2}) {
    const auto b = PrincipalBundle::monopole(GroupKind::U1, n);
    const auto a = ConnectionForm::monopole(GroupKind::U1, n);
    for (double theta : {pi / 4, pi / 2, 3 * pi / 4}) {
      const GroupElement h = loop_holonomy(a, b, latitude_loop(theta), 10000);
      EXPECT_LE(distance(h, GroupElement::phase(solid_angle_phase(n, theta))), 1e-6) << n << " " << theta;
    }
  }
  const GroupElement eq = loop_holonomy(ConnectionForm::monopole(GroupKind::U1, 1), PrincipalBundle::monopole(GroupKind::U1, 1),
                                        latitude_loop(pi / 2), 100000);
  EXPECT_NEAR(distance(eq, GroupElement::phase(pi)), 0, 1e-12);
}

TEST(Transport, MonopoleHolonomyIndependentOfBasepointChart) {
  const auto b = PrincipalBundle::monopole(GroupKind::U1, 1);
  const auto a = ConnectionForm::monopole(GroupKind::U1, 1);
  // A loop straddling the overlap but stored in the South chart.
  std::vector<ChartPoint> pts;
  for (int k = 0; k <= 40; ++k) pts.push_back(sphere_point(pi / 2, 2 * pi * k / 40, Chart::South));
  pts.back() = pts.front();
  const GroupElement h = loop_holonomy(a, b, Path(pts, Interpolation::Polar), 10000);
  EXPECT_LE(distance(h, GroupElement::phase(pi)), 1e-9);
}

TEST(Transport, NotClosedAndOutsideAtlas) {
  const auto b = PrincipalBundle::monopole(GroupKind::U1, 1);
  const auto a = ConnectionForm::monopole(GroupKind::U1, 1);
  EXPECT_EQ(code_of([&] { loop_holonomy(a, b, north_meridian(0.3, 1.0, 0.2, 5), 100); }), ErrorCode::NotClosed);
  // Chart change far from the overlap band.
  const Path jump({sphere_point(0.3, 0, Chart::North), sphere_point(2.9, 0, Chart::South)});
  EXPECT_EQ(code_of([&] { transport(a, b, jump, 100); }), ErrorCode::PathOutsideAtlas);
  EXPECT_EQ(code_of([&] { transport(ConnectionForm::zero(GroupKind::U1), kFlatU1, Path({flat(0, 0), flat(1, 0)}), 0); }),
            ErrorCode::InvalidArgument);
}

TEST(Transport, ConvergenceCheck) {
  TransportOptions opt;
  opt.steps = 3;
  opt.check_convergence = true;
  opt.convergence_tol = 1e-12;
  const Path p = north_meridian(0.2, 2.0, 0.0, 4);
  const auto b = PrincipalBundle::monopole(GroupKind::SU2, 1);
  EXPECT_EQ(code_of([&] { transport(ConnectionForm::random_sphere(GroupKind::SU2, 1, 5, 2.0), b, p, opt); }),
            ErrorCode::NonConvergent);
}

TEST(Transport, FunctorialityAndInverse) {
  const auto conn = ConnectionForm::random_smooth(GroupKind::SU2, 22);
  Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    const auto chain = oracle::random_chain(rng, 2);
    const GroupElement t1 = transport(conn, kFlatSU2, chain[0], 10000);
    const GroupElement t2 = transport(conn, kFlatSU2, chain[1], 10000);
    EXPECT_LE(distance(transport(conn, kFlatSU2, path_compose(chain[0], chain[1]), 10000), t2 * t1), 5e-8);
    EXPECT_LE(distance(transport(conn, kFlatSU2, path_reverse(chain[0]), 10000), t1.inverse()), 5e-8);
  }
}

TEST(Transport, ReparametrizationInvariance) {
  const auto conn = ConnectionForm::random_smooth(GroupKind::SU2, 24);
  Rng rng(25);
  for (int t = 0; t < 10; ++t) {
    const Path p = oracle::random_flat_path(rng, 4);
    const Path q = path_reparametrize(p, [](double s) { return s * s * s; }, 50);
    EXPECT_LE(distance(transport(conn, kFlatSU2, p, 10000), transport(conn, kFlatSU2, q, 10000)), 1e-7);
  }
}

TEST(Transport, ChartIndependence) {
  const auto b = PrincipalBundle::monopole(GroupKind::SU2, 1);
  const auto conn = ConnectionForm::random_sphere(GroupKind::SU2, 1, 26);
  for (double phi : {0.0, 1.0, 2.5, 4.0}) {
    const Path p = north_meridian(0.4, 2.2, phi, 30);
    TransportOptions north_only;
    north_only.comfort_radius = 1e9;
    const GroupElement switched = transport(conn, b, p, 10000);
    const GroupElement stayed = transport(conn, b, p, north_only);
    EXPECT_LE(distance(switched, stayed), 1e-7) << phi;
  }
}

TEST(Transport, ParallelMatchesSequential) {
  const auto conn = ConnectionForm::random_smooth(GroupKind::SU2, 27);
  Rng rng(28);
  std::vector<Path> paths;
  for (int k = 0; k < 9; ++k) paths.push_back(oracle::random_flat_path(rng, 3));
  const auto par = transport_all(conn, kFlatSU2, paths, 500);
  for (std::size_t k = 0; k < paths.size(); ++k) {
    EXPECT_EQ(par[k].as_quaternion(), transport(conn, kFlatSU2, paths[k], 500).as_quaternion());
  }
}

TEST(CanonicalFlat, Cases) {
  Rng rng(29);
  const Path p = oracle::random_flat_path(rng, 4);
  EXPECT_EQ(transport(canonical_flat(kFlatU1), kFlatU1, p, 50).theta(), 0.0);
  EXPECT_EQ(transport(canonical_flat(kFlatSU2), kFlatSU2, p, 50).as_quaternion(), Quaterniond::Identity());
  EXPECT_EQ(code_of([] { canonical_flat(PrincipalBundle::monopole(GroupKind::U1, 1)); }), ErrorCode::NotTrivializable);
}

TEST(CompareConnections, Cases) {
  const auto a1 = ConnectionForm::random_smooth(GroupKind::SU2, 30);
  const auto a2 = ConnectionForm::random_smooth(GroupKind::SU2, 31);
  Rng rng(32);
  const Path p = oracle::random_flat_path(rng, 4);
  EXPECT_LE(distance(compare_connections(a1, canonical_flat(kFlatSU2), kFlatSU2, p, 10000), transport(a1, kFlatSU2, p, 10000)), 1e-9);
  EXPECT_LE(distance(compare_connections(a1, a1, kFlatSU2, p, 10000), GroupElement::identity(GroupKind::SU2)), 1e-12);

  const auto b = PrincipalBundle::monopole(GroupKind::SU2, 1);
  const auto s1 = ConnectionForm::random_sphere(GroupKind::SU2, 1, 33);
  const auto s2 = ConnectionForm::random_sphere(GroupKind::SU2, 1, 34);
  const Path q = north_meridian(0.5, 2.0, 1.2, 12);
  EXPECT_LE(distance(compare_connections(s1, s2, b, q, 10000), compare_connections(s1, s2, b, q, 100000)), 1e-8);
}

TEST(AssociatedTransport, Actions) {
  Rng rng(35);
  const Path p = oracle::random_flat_path(rng, 4);
  const auto conn = ConnectionForm::random_smooth(GroupKind::SU2, 36);
  const GroupElement f0(rng.versor());
  const auto flat_out = associated_transport(canonical_flat(kFlatSU2), kFlatSU2, p, f0, Action::Fundamental, 100);
  EXPECT_LE(distance(std::get<GroupElement>(flat_out), f0), 1e-15);
  const auto orbit = associated_transport(conn, kFlatSU2, p, GroupElement::identity(GroupKind::SU2), Action::Fundamental, 2000);
  EXPECT_LE(distance(std::get<GroupElement>(orbit), transport(conn, kFlatSU2, p, 2000)), 1e-15);
  for (int t = 0; t < 20; ++t) {
    const Eigen::Vector3d v = rng.normal3();
    const Path r = oracle::random_flat_path(rng, 5);
    const auto out = std::get<Eigen::Vector3d>(associated_transport(conn, kFlatSU2, r, v, Action::Adjoint, 2000));
    EXPECT_NEAR(out.norm(), v.norm(), 1e-10 * v.norm());
  }
  EXPECT_EQ(code_of([] { action_from_string("spinor"); }), ErrorCode::UnknownAction);
  EXPECT_EQ(code_of([&] { associated_transport(conn, kFlatSU2, p, Eigen::Vector3d(1, 0, 0), Action::Fundamental, 10); }),
            ErrorCode::TypeMismatch);
}

TEST(Gauge, IdentityAndAbelianConstant) {
  const auto conn = ConnectionForm::random_smooth(GroupKind::SU2, 37);
  const auto same = gauge_transform(conn, kFlatSU2, GaugeTransformation::identity(GroupKind::SU2));
  const auto u1 = ConnectionForm::random_smooth(GroupKind::U1, 38);
  const auto u1_same = gauge_transform(u1, kFlatU1, GaugeTransformation::constant(GroupElement::phase(1.1)));
  Rng rng(39);
  for (int t = 0; t < 20; ++t) {
    const Eigen::Vector2d x(rng.uniform(-1, 1), rng.uniform(-1, 1));
    EXPECT_EQ(same.evaluate(Chart::Flat, x), conn.evaluate(Chart::Flat, x));
    EXPECT_LE((u1_same.evaluate(Chart::Flat, x) - u1.evaluate(Chart::Flat, x)).norm(), 1e-15);
  }
}

TEST(Gauge, CovarianceFlat) {
  const auto conn = ConnectionForm::random_smooth(GroupKind::SU2, 40);
  Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    const auto g = GaugeTransformation::random_flat(GroupKind::SU2, 100 + t);
    const auto gconn = gauge_transform(conn, kFlatSU2, g);
    const Path p = oracle::random_flat_path(rng, 4);
    const GroupElement expected = gauge_transform_transporter(transport(conn, kFlatSU2, p, 10000), g, p);
    EXPECT_LE(distance(transport(gconn, kFlatSU2, p, 10000), expected), 1e-7);
  }
}

TEST(Gauge, CovarianceSphere) {
  for (GroupKind group : {GroupKind::U1, GroupKind::SU2}) {
    const auto b = PrincipalBundle::monopole(group, 1);
    const auto conn = ConnectionForm::random_sphere(group, 1, 42);
    const auto g = GaugeTransformation::random_for(b, 43);
    const auto gconn = gauge_transform(conn, b, g);
    const Path p = north_meridian(0.4, 2.6, 0.7, 20);
    const GroupElement expected = gauge_transform_transporter(transport(conn, b, p, 10000), g, p);
    EXPECT_LE(distance(transport(gconn, b, p, 10000), expected), 1e-7);
    const Path loop = latitude_loop(2.0, 64, 0.3);
    const double before = normalized_real_trace(loop_holonomy(conn, b, loop, 10000));
    const double after = normalized_real_trace(loop_holonomy(gconn, b, loop, 10000));
    EXPECT_NEAR(before, after, 1e-8);
  }
}

TEST(Triviality, FlatAndU1) {
  const auto flat_v = triviality_test(kFlatSU2);
  EXPECT_EQ(flat_v.outcome, Triviality::Trivial);
  ASSERT_TRUE(flat_v.section);
  EXPECT_TRUE(flat_v.section->rings.empty());

  const auto zero = triviality_test(PrincipalBundle::monopole(GroupKind::U1, 0));
  EXPECT_EQ(zero.outcome, Triviality::Trivial);
  ASSERT_TRUE(zero.section);
  EXPECT_LE(zero.residual, 1e-9);
  for (int n : {-5, -1, 1, 3}) {
    const auto v = triviality_test(PrincipalBundle::monopole(GroupKind::U1, n));
    EXPECT_EQ(v.outcome, Triviality::Nontrivial);
    EXPECT_EQ(v.winding, n);
    EXPECT_FALSE(v.section);
  }
}

TEST(Triviality, U1TableWithZeroWindingGetsSection) {
  std::vector<GroupElement> table;
  for (int k = 0; k < 64; ++k) table.push_back(GroupElement::phase(2.5 * std::sin(2 * pi * k / 64)));
  const auto b = PrincipalBundle::sphere(GroupKind::U1, TransitionFunction::sampled(GroupKind::U1, table));
  const auto v = triviality_test(b);
  EXPECT_EQ(v.outcome, Triviality::Trivial);
  EXPECT_LE(v.residual, 1e-9);
  EXPECT_EQ(v.section->rings.back().front().theta(), 0.0);
}

TEST(Triviality, SU2AlwaysTrivial) {
  for (int n : {0, 1, 2, -3, 5}) {
    const auto v = triviality_test(PrincipalBundle::monopole(GroupKind::SU2, n));
    EXPECT_EQ(v.outcome, Triviality::Trivial) << n;
    ASSERT_TRUE(v.section);
    EXPECT_LE(v.residual, 1e-6);
    for (const auto& g : v.section->rings.back()) EXPECT_EQ(g.as_quaternion(), v.section->rings.back().front().as_quaternion());
  }
}

TEST(Contraction, GreatCircleAndRefinement) {
  std::vector<Versord> loop;
  for (int k = 0; k <= 4; ++k) loop.push_back(Versord::Exp(Eigen::Vector3d::UnitZ(), 2 * pi * k / 4));
  loop.back() = loop.front();
  const LoopContraction c = contract_loop(loop);
  EXPECT_LE(c.max_step, pi / 2);
  EXPECT_LE(c.spread, 1e-13);
  for (std::size_t k = 0; k < loop.size(); ++k) EXPECT_LE(c.stages.front()[k * c.stride].angleTo(loop[k]), 1e-15);
  std::vector<Versord> open = loop;
  open.back() = Versord(Quaterniond(0.9, 0.1, 0, 0));
  EXPECT_EQ(code_of([&] { contract_loop(open); }), ErrorCode::NotClosed);
}
