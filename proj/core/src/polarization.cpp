#include "vacpol/polarization.hpp"

#include "vacpol/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace vacpol {

namespace {

constexpr double kPi = std::numbers::pi;

double max_mass_gev(const ParticleRegistry& reg) {
  double m = 0.0;
  for (const auto& t : reg.loop_terms()) m = std::max(m, t.mass_gev);
  return m;
}

} // namespace

double log_mass_shift_a() { return std::exp(5.0 / 3.0); }

LoopIntegral loop_integral(double s, double abs_tol) {
  if (s == 0.0) return {0.0, 0.0};

  // ln(1 - s x(1-x)); log1p keeps precision for |s| << 1, and the branch
  // from k^2 + i eta makes the log -|a| - i pi between the roots for s > 4.
  auto integrand = [s](double x) {
    const double y = x * (1.0 - x);
    const double a = s * y;
    if (a < 1.0) return y * std::log1p(-a);
    if (a == 1.0) return 0.0;  // measure-zero root, integrable
    return y * std::log(a - 1.0);
  };

  QuadResult re;
  double im = 0.0;
  if (s > 4.0) {
    const double beta = std::sqrt(1.0 - 4.0 / s);
    const double xm = 0.5 * (1.0 - beta);
    const double xp = 0.5 * (1.0 + beta);
    const double pts[5] = {0.0, xm, 0.5, xp, 1.0};
    re = integrate_segments(integrand, pts, abs_tol);
    // int_{x-}^{x+} x(1-x) dx = (beta/6)(1 + 2/s)
    im = -kPi * (beta / 6.0) * (1.0 + 2.0 / s);
  } else {
    const double pts[3] = {0.0, 0.5, 1.0};
    re = integrate_segments(integrand, pts, abs_tol);
  }
  return {{re.value, im}, re.error};
}

std::complex<double> delta_pi_exact(const Wavevector& k2,
                                    const ParticleRegistry& reg,
                                    const PhysicalConstants& consts,
                                    double abs_tol, double* error_out) {
  if (k2.k2_gev2 == 0.0) {
    if (error_out) *error_out = 0.0;
    return 0.0;
  }
  const auto terms = reg.loop_terms();
  const double prefactor = 2.0 * consts.alpha / kPi;
  // sign: spacelike k2 < 0 makes the log argument > 1, so delta_pi > 0
  std::complex<double> sum = 0.0;
  double err = 0.0;
  for (const auto& t : terms) {
    const double s = k2.k2_gev2 / (t.mass_gev * t.mass_gev);
    const LoopIntegral li = loop_integral(s, abs_tol / terms.size());
    sum += t.weight * li.value;
    err += t.weight * li.error;
  }
  if (error_out) *error_out = prefactor * err;
  return prefactor * sum;
}

double delta_pi_asymptotic(const Wavevector& k2, const ParticleRegistry& reg,
                           const PhysicalConstants& consts) {
  if (k2.k2_gev2 == 0.0) {
    throw ValidationError(
        "delta_pi_asymptotic: the log form diverges at k2 = 0");
  }
  const double log_a = 5.0 / 3.0;
  const double log_abs_k2 = std::log(std::fabs(k2.k2_gev2));
  double sum = 0.0;
  for (const auto& t : reg.loop_terms()) {
    sum += t.weight * (log_abs_k2 - 2.0 * std::log(t.mass_gev) - log_a);
  }
  return consts.alpha / (3.0 * kPi) * sum;
}

double pi2_zero(double cutoff_gev, const ParticleRegistry& reg,
                const PhysicalConstants& consts, bool include_a) {
  const double heaviest = max_mass_gev(reg);
  if (!(cutoff_gev > heaviest)) {
    throw ValidationError("pi2_zero: cutoff " + std::to_string(cutoff_gev) +
                          " GeV is not above the heaviest mass scale " +
                          std::to_string(heaviest) + " GeV");
  }
  const double log_a = include_a ? 5.0 / 3.0 : 0.0;
  const double log_cut = std::log(cutoff_gev);
  double sum = 0.0;  // overflow-safe log form: cutoffs reach 1e30 GeV
  for (const auto& t : reg.loop_terms()) {
    sum += t.weight * (2.0 * (log_cut - std::log(t.mass_gev)) - log_a);
  }
  return consts.alpha / (3.0 * kPi) * sum;
}

double z3_at_cutoff(double cutoff_gev, const ParticleRegistry& reg,
                    const PhysicalConstants& consts, bool include_a) {
  return 1.0 - pi2_zero(cutoff_gev, reg, consts, include_a);
}

namespace {

std::complex<double> one_minus_checked(std::complex<double> delta_pi,
                                       const char* who) {
  const std::complex<double> d = 1.0 - delta_pi;
  if (std::abs(d) < kPoleProximity) {
    throw PoleError(std::string(who) +
                    ": |1 - delta_pi| < 1e-9, Landau-pole divergence");
  }
  return d;
}

} // namespace

double eps0_of_k2(const Wavevector& k2, const ParticleRegistry& reg,
                  const PhysicalConstants& consts, double abs_tol) {
  const auto dp = delta_pi_exact(k2, reg, consts, abs_tol);
  one_minus_checked(dp, "eps0_of_k2");
  return consts.eps0 * (1.0 - dp.real());
}

double mu0_of_k2(const Wavevector& k2, const ParticleRegistry& reg,
                 const PhysicalConstants& consts, double abs_tol) {
  // same association as the constants table, so mu0(0) == mu0 bit-for-bit
  return 1.0 / (eps0_of_k2(k2, reg, consts, abs_tol) * consts.c * consts.c);
}

std::complex<double> alpha_eff(const Wavevector& k2,
                               const ParticleRegistry& reg,
                               const PhysicalConstants& consts,
                               double abs_tol) {
  const auto dp = delta_pi_exact(k2, reg, consts, abs_tol);
  return consts.alpha / one_minus_checked(dp, "alpha_eff");
}

PolarizationResult evaluate(const Wavevector& k2, const ParticleRegistry& reg,
                            const PhysicalConstants& consts, double abs_tol) {
  PolarizationResult r;
  r.k2 = k2;
  r.delta_pi = delta_pi_exact(k2, reg, consts, abs_tol, &r.quadrature_error);
  one_minus_checked(r.delta_pi, "evaluate");
  r.eps0_of_k2 = consts.eps0 * (1.0 - r.delta_pi.real());
  r.mu0_of_k2 = 1.0 / (r.eps0_of_k2 * consts.c * consts.c);
  r.alpha_eff = consts.alpha / (1.0 - r.delta_pi);
  return r;
}

std::complex<double> propagator_closed_form(double k2_gev2, double eta,
                                            std::complex<double> delta_pi) {
  one_minus_checked(delta_pi, "propagator");
  const std::complex<double> denom =
      (1.0 - delta_pi) * std::complex<double>(k2_gev2, eta);
  return -1.0 / denom;
}

std::complex<double> propagator_partial_sum(double k2_gev2, double eta,
                                            std::complex<double> delta_pi,
                                            int n_terms) {
  if (std::abs(delta_pi) >= 1.0) {
    throw ConvergenceError(
        "propagator series: |delta_pi| >= 1, the geometric series diverges",
        std::abs(delta_pi));
  }
  std::complex<double> sum = 0.0;
  std::complex<double> power = 1.0;
  for (int n = 0; n <= n_terms; ++n) {
    sum += power;
    power *= delta_pi;
  }
  return -sum / std::complex<double>(k2_gev2, eta);
}

PropagatorValue propagator(const Wavevector& k2, double eta,
                           const ParticleRegistry& reg,
                           const PhysicalConstants& consts, double abs_tol) {
  if (!(eta > 0.0)) {
    throw ValidationError("propagator: eta must be > 0");
  }
  const auto dp = delta_pi_exact(k2, reg, consts, abs_tol);
  return {k2, eta, propagator_closed_form(k2.k2_gev2, eta, dp)};
}

std::complex<double> propagator_series(const Wavevector& k2, double eta,
                                       int n_terms,
                                       const ParticleRegistry& reg,
                                       const PhysicalConstants& consts,
                                       double abs_tol) {
  if (!(eta > 0.0)) {
    throw ValidationError("propagator_series: eta must be > 0");
  }
  const auto dp = delta_pi_exact(k2, reg, consts, abs_tol);
  return propagator_partial_sum(k2.k2_gev2, eta, dp, n_terms);
}

} // namespace vacpol
