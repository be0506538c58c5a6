#include "gaugekit/connection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaugekit/manifold.hpp"
#include "gaugekit/random.hpp"

namespace gaugekit {

namespace {

// Lie-algebra row used by abelian built-ins: i for U(1), k for SU(2).
int abelian_row(GroupKind group) { return group == GroupKind::U1 ? 0 : 2; }

FormValue project(GroupKind group, FormValue v) {
  if (group == GroupKind::U1) v.bottomRows<2>().setZero();
  return v;
}

struct FourierMode {
  Eigen::Vector3d wave;
  double phase;
  Eigen::Matrix3d coefficients;  // rows: Lie components; columns: directions
};

std::vector<FourierMode> random_modes(Rng& rng, int count, int dims, double amplitude) {
  std::vector<FourierMode> modes;
  for (int m = 0; m < count; ++m) {
    FourierMode mode;
    mode.wave = rng.uniform3(-1.5, 1.5);
    if (dims == 2) mode.wave.z() = 0;
    mode.phase = rng.uniform(0, 2 * std::numbers::pi);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) mode.coefficients(r, c) = amplitude * rng.uniform(-1, 1);
    modes.push_back(mode);
  }
  return modes;
}

Eigen::Matrix3d sum_modes(const std::vector<FourierMode>& modes, const Eigen::Vector3d& x) {
  Eigen::Matrix3d out = Eigen::Matrix3d::Zero();
  for (const auto& m : modes) out += m.coefficients * std::sin(m.wave.dot(x) + m.phase);
  return out;
}

}  // namespace

ConnectionForm::ConnectionForm(GroupKind group, ChartForm flat, ChartForm north, ChartForm south)
    : group_(group),
      forms_(std::make_shared<const std::array<ChartForm, 3>>(
          std::array<ChartForm, 3>{std::move(flat), std::move(north), std::move(south)})) {}

ConnectionForm ConnectionForm::zero(GroupKind group) {
  const ChartForm z = [](const Eigen::Vector2d&) { return FormValue::Zero().eval(); };
  return ConnectionForm(group, z, z, z);
}

ConnectionForm ConnectionForm::constant(GroupKind group, const FormValue& value) {
  const FormValue v = project(group, value);
  return ConnectionForm(group, [v](const Eigen::Vector2d&) { return v; }, nullptr, nullptr);
}

ConnectionForm ConnectionForm::monopole(GroupKind group, int charge) {
  const int row = abelian_row(group);
  const double n = charge;
  const auto make = [row, n](double sign) {
    return [row, n, sign](const Eigen::Vector2d& x) {
      // (n/2)(1 -+ cos theta) dphi = +-n (u dv - v du) / (1 + r^2) in either chart.
      FormValue f = FormValue::Zero();
      const double s = sign * n / (1 + x.squaredNorm());
      f(row, 0) = -s * x.y();
      f(row, 1) = s * x.x();
      return f;
    };
  };
  return ConnectionForm(group, nullptr, make(1.0), make(-1.0));
}

ConnectionForm ConnectionForm::grid(GroupKind group, Chart chart, const Eigen::Vector2d& lower,
                                    const Eigen::Vector2d& upper, int nu, int nv, std::vector<FormValue> values) {
  if (nu < 2 || nv < 2 || values.size() != std::size_t(nu) * std::size_t(nv)) {
    throw Error(ErrorCode::InvalidArgument, "grid needs nu*nv values with nu, nv >= 2");
  }
  if (!(lower.array() < upper.array()).all()) throw Error(ErrorCode::InvalidArgument, "grid bounds must be increasing");
  for (auto& v : values) v = project(group, v);
  auto data = std::make_shared<const std::vector<FormValue>>(std::move(values));
  ChartForm f = [data, lower, upper, nu, nv](const Eigen::Vector2d& x) {
    const Eigen::Vector2d t = (x - lower).cwiseQuotient(upper - lower);
    if ((t.array() < -1e-12).any() || (t.array() > 1 + 1e-12).any()) {
      throw Error(ErrorCode::PathOutsideAtlas, "point outside the connection grid");
    }
    const double gu = std::clamp(t.x(), 0.0, 1.0) * (nu - 1);
    const double gv = std::clamp(t.y(), 0.0, 1.0) * (nv - 1);
    const int iu = std::min(int(gu), nu - 2);
    const int iv = std::min(int(gv), nv - 2);
    const double fu = gu - iu;
    const double fv = gv - iv;
    const auto at = [&](int a, int b) -> const FormValue& { return (*data)[std::size_t(b * nu + a)]; };
    return ((1 - fu) * (1 - fv) * at(iu, iv) + fu * (1 - fv) * at(iu + 1, iv) + (1 - fu) * fv * at(iu, iv + 1) +
            fu * fv * at(iu + 1, iv + 1))
        .eval();
  };
  std::array<ChartForm, 3> forms;
  forms[static_cast<std::size_t>(chart)] = std::move(f);
  return ConnectionForm(group, forms[0], forms[1], forms[2]);
}

ConnectionForm ConnectionForm::random_smooth(GroupKind group, std::uint64_t seed, double amplitude, int modes) {
  Rng rng(seed);
  const auto m = random_modes(rng, modes, 2, amplitude);
  return ConnectionForm(
      group,
      [group, m](const Eigen::Vector2d& x) {
        return project(group, sum_modes(m, Eigen::Vector3d(x.x(), x.y(), 0)).leftCols<2>());
      },
      nullptr, nullptr);
}

ConnectionForm ConnectionForm::random_sphere(GroupKind group, int charge, std::uint64_t seed, double amplitude,
                                             int modes) {
  Rng rng(seed);
  const auto m = random_modes(rng, modes, 3, amplitude);
  // Ambient su(2)-valued 1-form b(X) dX. For SU(2) the i, j rows are damped
  // towards the south pole, where conjugation by exp(k n phi) is singular.
  const auto ambient = [group, m](const Eigen::Vector3d& X) {
    Eigen::Matrix3d b = sum_modes(m, X);
    if (group == GroupKind::U1) {
      b.bottomRows<2>().setZero();
    } else {
      const double w = std::pow((1 + X.z()) / 2, 4);
      b.topRows<2>() *= w;
    }
    return b;
  };
  ChartForm north = [ambient](const Eigen::Vector2d& x) {
    const ChartPoint p{Chart::North, x};
    return (ambient(embed_in_r3(p)) * embedding_jacobian(p)).eval();
  };
  ChartForm south = [ambient, group, charge](const Eigen::Vector2d& y) {
    const ChartPoint p{Chart::South, y};
    FormValue f = ambient(embed_in_r3(p)) * embedding_jacobian(p);
    if (group == GroupKind::SU2 && y.squaredNorm() > 0) {
      // Ad of exp(k n phi) rotates the (i, j) plane by 2 n phi.
      const double a = 2.0 * charge * std::atan2(y.y(), y.x());
      Eigen::Matrix3d rot = Eigen::Matrix3d::Identity();
      rot.topLeftCorner<2, 2>() << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
      f = rot * f;
    }
    return f;
  };
  return monopole(group, charge) + ConnectionForm(group, nullptr, north, south);
}

FormValue ConnectionForm::evaluate(Chart chart, const Eigen::Vector2d& x) const {
  const auto& f = chart_form(chart);
  if (!f) throw Error(ErrorCode::PathOutsideAtlas, "connection has no representative in chart " + std::string(to_string(chart)));
  return f(x);
}

Quaterniond ConnectionForm::contract(Chart chart, const Eigen::Vector2d& x, const Eigen::Vector2d& velocity) const {
  const Eigen::Vector3d v = evaluate(chart, x) * velocity;
  return group_ == GroupKind::U1 ? Quaterniond(0, v.x(), 0, 0) : Quaterniond::Pure(v);
}

ConnectionForm ConnectionForm::operator+(const ConnectionForm& other) const {
  if (group_ != other.group_) throw Error(ErrorCode::TypeMismatch, "sum of connections on different groups");
  std::array<ChartForm, 3> sum;
  for (std::size_t c = 0; c < 3; ++c) {
    const ChartForm a = (*forms_)[c];
    const ChartForm b = (*other.forms_)[c];
    if (a && b) sum[c] = [a, b](const Eigen::Vector2d& x) { return (a(x) + b(x)).eval(); };
  }
  return ConnectionForm(group_, sum[0], sum[1], sum[2]);
}

}  // namespace gaugekit
