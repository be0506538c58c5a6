#include <gtest/gtest.h>

#include <cmath>

#include <Eigen/LU>

#include "gaugekit/clifford.hpp"
#include "gaugekit/random.hpp"
#include "gaugekit/spin.hpp"
#include "support.hpp"

using namespace gaugekit;

namespace {

const Quaterniond kI = Quaterniond::UnitI(), kJ = Quaterniond::UnitJ(), kK = Quaterniond::UnitK();
const Quaterniond kOne = Quaterniond::Identity();

Cl03d pair(const Quaterniond& a, const Quaterniond& b) { return Cl03d(a, b); }

void expect_cl_eq(const Cl03d& a, const Cl03d& b) { EXPECT_EQ(a.coeffs(), b.coeffs()) << a.coeffs().transpose(); }

}  // namespace

TEST(Quaternion, UnitProducts) {
  EXPECT_EQ(kI * kJ, kK);
  EXPECT_EQ(kJ * kK, kI);
  EXPECT_EQ(kK * kI, kJ);
  EXPECT_EQ(kJ * kI, -kK);
  EXPECT_EQ(kI * kI, -kOne);
  EXPECT_EQ(kJ * kJ, -kOne);
  EXPECT_EQ(kK * kK, -kOne);
  const Quaterniond q(0.3, -1.2, 2.5, 0.7);
  EXPECT_EQ(kOne * q, q);
  EXPECT_EQ(quat_mul(q, kOne), q);
}

TEST(Quaternion, Associative) {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const auto a = rng.normal_quaternion(), b = rng.normal_quaternion(), c = rng.normal_quaternion();
    EXPECT_LE(((a * b) * c - a * (b * c)).norm(), 1e-14 * (1 + a.norm() * b.norm() * c.norm()));
  }
}

TEST(QuatPolar, Examples) {
  const auto p = quat_polar(Quaterniond(0, 2, 0, 0));
  EXPECT_EQ(p.radius, 2.0);
  EXPECT_EQ(p.direction.quaternion(), kI);
  const auto one = quat_polar(kOne);
  EXPECT_EQ(one.radius, 1.0);
  EXPECT_EQ(one.direction.quaternion(), kOne);
}

TEST(QuatPolar, RoundTripAcrossScales) {
  Rng rng(2);
  for (int t = 0; t < 1000; ++t) {
    const Quaterniond q = rng.versor().quaternion() * std::pow(10.0, rng.uniform(-6, 6));
    const auto p = quat_polar(q);
    EXPECT_LE((p.recompose() - q).norm(), 1e-12 * q.norm());
  }
}

TEST(QuatPolar, ZeroThrows) {
  try {
    quat_polar(Quaterniond::Zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroQuaternion);
  }
  EXPECT_THROW(quat_polar(Quaterniond(1e-310, 0, 0, 0)), Error);
  EXPECT_NO_THROW(quat_polar(Quaterniond(1e-200, 0, 0, 0)));
}

TEST(Versor, StaysNormalizedOverLongChains) {
  Rng rng(3);
  Versord v;
  double worst = 0;
  std::vector<Versord> pool;
  for (int k = 0; k < 64; ++k) pool.push_back(rng.versor());
  for (int k = 0; k < 1000000; ++k) {
    v *= pool[std::size_t(k) & 63];
    if ((k & 1023) == 0) worst = std::max(worst, std::abs(v.quaternion().norm() - 1));
  }
  worst = std::max(worst, std::abs(v.quaternion().norm() - 1));
  EXPECT_LE(worst, 1e-12);
}

TEST(Clifford, Generators) {
  expect_cl_eq(cl_generator<double>(1), pair(-kI, kI));
  expect_cl_eq(cl_generator<double>(2), pair(-kJ, kJ));
  expect_cl_eq(cl_generator<double>(3), pair(-kK, kK));
  for (int bad : {0, 4, -1}) {
    try {
      cl_generator<double>(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
    }
  }
}

TEST(Clifford, Relations) {
  const Cl03d minus_one = pair(-kOne, -kOne);
  for (int n = 1; n <= 3; ++n) {
    const Cl03d en = cl_generator<double>(n);
    expect_cl_eq(cl_mul(en, en), minus_one);
    for (int m = 1; m <= 3; ++m) {
      if (m == n) continue;
      const Cl03d em = cl_generator<double>(m);
      expect_cl_eq(cl_mul(en, em), cl_mul(em, en) * -1.0);
    }
  }
  // Hamilton ij = k: e1 e2 = k + k', so -e1 e2 = -k - k'.
  const Cl03d e12 = cl_mul(cl_generator<double>(1), cl_generator<double>(2));
  expect_cl_eq(e12, pair(kK, kK));
  expect_cl_eq(e12 * -1.0, pair(-kK, -kK));
}

TEST(Clifford, EvenBasis) {
  expect_cl_eq(cl_even_basis<double>(0), pair(kOne, kOne));
  expect_cl_eq(cl_even_basis<double>(1), pair(kI, kI));
  expect_cl_eq(cl_even_basis<double>(2), pair(kJ, kJ));
  expect_cl_eq(cl_even_basis<double>(3), pair(kK, kK));
  EXPECT_THROW(cl_even_basis<double>(4), Error);
}

TEST(Clifford, BasisTableMatchesWordOracle) {
  const auto words = oracle::blade_words();
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const auto [c, sign] = oracle::identify(oracle::word_product(words[std::size_t(a)], words[std::size_t(b)]));
      ASSERT_GE(c, 0);
      expect_cl_eq(cl_mul(cl_blade<double>(a), cl_blade<double>(b)), cl_blade<double>(c) * double(sign));
    }
  }
}

TEST(Clifford, BladesAreIndependent) {
  Eigen::Matrix<double, 8, 8> m;
  for (int a = 0; a < 8; ++a) m.col(a) = cl_blade<double>(a).coeffs();
  EXPECT_NEAR(std::abs(m.determinant()), 16.0, 1e-12);
}

TEST(IclDecompose, Examples) {
  const auto d = icl_decompose(pair(Quaterniond::Real(2), Quaterniond::Real(3)));
  EXPECT_EQ(d.r1, 2.0);
  EXPECT_EQ(d.r2, 3.0);
  EXPECT_EQ(d.v1.quaternion(), kOne);
  EXPECT_EQ(d.v2.quaternion(), kOne);
  const auto e = icl_decompose(pair(kI * 2.0, kOne));
  EXPECT_EQ(e.r1, 2.0);
  EXPECT_EQ(e.v1.quaternion(), kI);
  EXPECT_EQ(e.r2, 1.0);
  EXPECT_EQ(e.v2.quaternion(), kOne);
}

TEST(IclDecompose, RoundTrip) {
  Rng rng(4);
  for (int t = 0; t < 1000; ++t) {
    const Cl03d x(rng.versor().quaternion() * std::pow(10.0, rng.uniform(-6, 6)),
                  rng.versor().quaternion() * std::pow(10.0, rng.uniform(-6, 6)));
    const Cl03d back = icl_decompose(x).recompose();
    EXPECT_LE((back.first() - x.first()).norm(), 1e-12 * x.first().norm());
    EXPECT_LE((back.second() - x.second()).norm(), 1e-12 * x.second().norm());
  }
}

TEST(IclDecompose, NotInvertible) {
  for (const Cl03d& x : {pair(Quaterniond::Zero(), kOne), pair(kI, Quaterniond::Zero()),
                         pair(kOne, Quaterniond(1e-14, 0, 0, 0))}) {
    EXPECT_FALSE(is_invertible(x));
    try {
      icl_decompose(x);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotInvertible);
    }
  }
}

TEST(Spin3, EmbedExamples) {
  expect_cl_eq(spin3_embed(Versord()), pair(kOne, kOne));
  expect_cl_eq(spin3_embed(Versord(kI)), pair(kI, kI));
}

TEST(Spin3, HomomorphismAndInjective) {
  Rng rng(5);
  std::vector<Versord> vs;
  for (int t = 0; t < 1000; ++t) vs.push_back(rng.versor());
  for (int t = 0; t + 1 < 1000; ++t) {
    const Cl03d lhs = spin3_embed(vs[std::size_t(t)] * vs[std::size_t(t + 1)]);
    const Cl03d rhs = cl_mul(spin3_embed(vs[std::size_t(t)]), spin3_embed(vs[std::size_t(t + 1)]));
    EXPECT_LE((lhs.coeffs() - rhs.coeffs()).norm(), 1e-12);
  }
  double closest = 1e9;
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      closest = std::min(closest, (spin3_embed(vs[a]).coeffs() - spin3_embed(vs[b]).coeffs()).norm());
    }
  }
  EXPECT_GT(closest, 1e-9);
}

TEST(Spin4, Quotient) {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const Versord u = rng.versor(), v = rng.versor(), w = rng.versor();
    EXPECT_LE(spin4_quotient(Spin4d{v, v}).angleTo(Versord()), 1e-12);
    EXPECT_LE(spin4_quotient(Spin4d{u, Versord()}).angleTo(u), 1e-15);
    const Spin4d s{u, v};
    EXPECT_LE(spin4_quotient(s * Spin4d{w, w}).angleTo(spin4_quotient(s)), 1e-12);
    // Kernel is exactly the diagonal.
    EXPECT_GT(spin4_quotient(Spin4d{u, v}).angleTo(Versord()), 0.0);
  }
}
