#include "gaugekit/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gaugekit/random.hpp"
#include "gaugekit/transport.hpp"

namespace gaugekit {

namespace {

double closure_gap(const Cl03d& a, const Cl03d& b) {
  return (a.coeffs() - b.coeffs()).norm() / std::max(1.0, a.coeffs().norm());
}
double closure_gap(const Spin4d& a, const Spin4d& b) { return a.distance(b); }
double closure_gap(const Versord& a, const Versord& b) { return a.angleTo(b); }
double closure_gap(double a, double b) { return std::abs(wrap_phase(a - b)); }

double phi_at(std::size_t k, std::size_t n) { return 2 * std::numbers::pi * double(k) / double(n); }

template <typename F>
auto sample_loop(std::size_t n, F f) {
  std::vector<decltype(f(0.0))> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(f(phi_at(k, n)));
  out.push_back(out.front());
  return out;
}

std::vector<GroupElement> as_elements(const VersorLoop& loop) {
  std::vector<GroupElement> out;
  for (const auto& v : loop.samples()) out.emplace_back(v);
  return out;
}

}  // namespace

template <typename Element>
TransitionLoop<Element>::TransitionLoop(std::vector<Element> samples) : samples_(std::move(samples)) {
  if (samples_.size() < kMinLoopIntervals + 1) {
    throw Error(ErrorCode::InvalidArgument, "transition loops need at least 256 intervals");
  }
  if (closure_gap(samples_.front(), samples_.back()) > kLoopClosureTolerance) {
    throw Error(ErrorCode::NotClosed, "transition loop does not close");
  }
}

template class TransitionLoop<Cl03d>;
template class TransitionLoop<Spin4d>;
template class TransitionLoop<Versord>;
template class TransitionLoop<double>;

Spin4Loop polar_retract(const IclLoop& loop) {
  std::vector<Spin4d> out;
  out.reserve(loop.size());
  for (std::size_t k = 0; k < loop.size(); ++k) {
    try {
      out.push_back(spin4_part(icl_decompose(loop[k])));
    } catch (const Error& e) {
      throw Error(e.code(), "sample " + std::to_string(k) + ": " + e.detail());
    }
  }
  return Spin4Loop(std::move(out));
}

VersorLoop quotient_fiber_loop(const Spin4Loop& loop) {
  std::vector<Versord> out;
  out.reserve(loop.size());
  for (const auto& s : loop.samples()) out.push_back(spin4_quotient(s));
  return VersorLoop(std::move(out));
}

ReductionVerdict section_glue_test(const PhaseLoop& fiber) {
  ReductionVerdict verdict;
  const int w = phase_winding(fiber.samples());
  if (w != 0) {
    verdict.outcome = ReductionOutcome::Obstructed;
    verdict.obstruction = w;
    return verdict;
  }
  std::vector<double> unwrapped{fiber[0]};
  std::vector<GroupElement> expected{GroupElement::phase(fiber[0])};
  for (std::size_t k = 1; k < fiber.size(); ++k) {
    unwrapped.push_back(unwrapped.back() + wrap_phase(fiber[k] - fiber[k - 1]));
    expected.push_back(GroupElement::phase(fiber[k]));
  }
  verdict.section = section_from_phases(unwrapped, 1 / 1.2);
  verdict.residual = gluing_residual(*verdict.section, expected);
  return verdict;
}

ReductionVerdict section_glue_test(const VersorLoop& fiber) {
  ReductionVerdict verdict;
  const LoopContraction c = contract_loop(fiber.samples());
  verdict.section = section_from_contraction(c, 1 / 1.2);
  verdict.residual = gluing_residual(*verdict.section, as_elements(fiber)) + c.spread;
  return verdict;
}

ReductionVerdict reduce_pipeline(const IclLoop& loop) {
  const Spin4Loop spin4 = polar_retract(loop);
  ReductionVerdict verdict = section_glue_test(quotient_fiber_loop(spin4));
  const auto& ring = verdict.section->rings.front();
  const std::size_t stride = verdict.section->stride;
  double off_diagonal = 0;
  std::vector<Versord> reduced;
  for (std::size_t k = 0; k < spin4.size(); ++k) {
    const Versord& s = ring.at(k * stride).versor();
    const Versord left = s.inverse() * spin4[k].u;
    off_diagonal = std::max(off_diagonal, left.angleTo(spin4[k].v));
    reduced.push_back(spin4[k].v);
  }
  verdict.residual += off_diagonal;
  verdict.reduced_transition = VersorLoop(std::move(reduced));
  return verdict;
}

IclLoop icl_constant_loop(const Cl03d& x, std::size_t n) {
  return IclLoop(sample_loop(n, [&](double) { return x; }));
}

IclLoop icl_winding_loop(int w, std::size_t n) {
  return IclLoop(sample_loop(n, [w](double phi) {
    const double r = 2 + std::sin(phi);
    return Cl03d(Versord::Exp(Eigen::Vector3d::UnitZ(), w * phi).quaternion() * r, Quaterniond::Real(r));
  }));
}

IclLoop icl_random_loop(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  struct Summand {
    double r0, r1, r2;
    Versord rotation;
    Eigen::Vector3d axis;
    int w;
    Eigen::Vector3d b1, b2;
  };
  const auto draw = [&rng] {
    Summand s;
    s.r0 = rng.uniform(1, 3);
    s.r1 = rng.uniform(-0.4, 0.4) * s.r0;
    s.r2 = rng.uniform(-0.4, 0.4) * s.r0;
    s.rotation = rng.versor();
    s.axis = rng.normal3().normalized();
    s.w = int(rng.next() % 5) - 2;
    s.b1 = rng.uniform3(-0.5, 0.5);
    s.b2 = rng.uniform3(-0.5, 0.5);
    return s;
  };
  const Summand a = draw();
  const Summand b = draw();
  const auto value = [](const Summand& s, double phi) {
    const double r = s.r0 + s.r1 * std::cos(phi) + s.r2 * std::sin(2 * phi);
    const Versord v = s.rotation * Versord::Exp(s.axis, s.w * phi) *
                      Versord::Exp(Eigen::Vector3d(s.b1 * std::sin(phi) + s.b2 * std::cos(3 * phi)));
    return v.quaternion() * r;
  };
  return IclLoop(sample_loop(n, [&](double phi) { return Cl03d(value(a, phi), value(b, phi)); }));
}

PhaseLoop phase_winding_loop(int w, std::size_t n) {
  return PhaseLoop(sample_loop(n, [w](double phi) { return wrap_phase(w * phi); }));
}

VersorLoop versor_circle_loop(const Eigen::Vector3d& axis, std::size_t n) {
  const Eigen::Vector3d a = axis.normalized();
  return VersorLoop(sample_loop(n, [&a](double phi) { return Versord::Exp(a, phi); }));
}

}  // namespace gaugekit
