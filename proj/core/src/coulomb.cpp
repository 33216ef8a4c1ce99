#include "vacpol/coulomb.hpp"

#include "vacpol/polarization.hpp"
#include "vacpol/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace vacpol {

namespace {

constexpr double kPi = std::numbers::pi;

// Best Euler-transform estimate of sum(terms): repeatedly average the
// partial sums and keep the entry with the smallest successive change.
// Returns {estimate, change at that depth}.
std::pair<double, double> euler_best(const std::vector<double>& terms) {
  std::vector<double> row(terms.size());
  double acc = 0.0;
  for (size_t i = 0; i < terms.size(); ++i) {
    acc += terms[i];
    row[i] = acc;
  }
  double best = row.back();
  double best_err = std::fabs(terms.back());
  double prev = row.back();
  while (row.size() > 1) {
    for (size_t i = 0; i + 1 < row.size(); ++i) {
      row[i] = 0.5 * (row[i] + row[i + 1]);
    }
    row.pop_back();
    const double change = std::fabs(row.back() - prev);
    if (change < best_err) {
      best = row.back();
      best_err = change;
    }
    prev = row.back();
  }
  return {best, best_err};
}

} // namespace

double electron_compton_m(const PhysicalConstants& consts) {
  return consts.hbar_c_gev_m() / kElectronMassGev;
}

CorrectionResult screening_correction(double rho, const ParticleRegistry& reg,
                                      const PhysicalConstants& consts,
                                      PotentialMode mode,
                                      const CoulombOptions& opts) {
  if (!(rho > 0.0)) {
    throw ValidationError("screening_correction: r must be > 0");
  }

  // floors: the inner quadratures cannot usefully go below machine level
  const double dp_tol = std::max(opts.abs_tol * 1e-3, 1e-14);
  const double interval_tol = std::max(opts.abs_tol * 0.05, 1e-15);

  // u = q r; q = (u / rho) m_e in GeV feeds the spacelike polarizability
  auto g_of_u = [&](double u) {
    const double q_gev = u / rho * kElectronMassGev;
    const Wavevector k2 = wavevector_from_k2(-q_gev * q_gev);
    const double dp = delta_pi_exact(k2, reg, consts, dp_tol).real();
    if (mode == PotentialMode::full && std::fabs(1.0 - dp) < kPoleProximity) {
      throw PoleError("screening_correction: delta_pi reached 1 inside the "
                      "momentum integral");
    }
    return mode == PotentialMode::full ? dp / (1.0 - dp) : dp;
  };
  auto integrand = [&](double u) {
    if (u == 0.0) return 0.0;
    return std::sin(u) / u * g_of_u(u);
  };

  // Alternating interval sums between the zeros of sin; the first interval
  // carries the ln(u) endpoint behaviour, so it gets the adaptive treatment.
  std::vector<double> terms;
  terms.reserve(64);
  double inner_err = 0.0;
  {
    const QuadResult first = integrate(integrand, 0.0, kPi, opts.abs_tol * 0.05);
    terms.push_back(first.value);
    inner_err += first.error;
  }

  double best = terms[0], best_err = std::fabs(terms[0]);
  int n = 1;
  bool converged = false;
  for (; n < opts.max_intervals; ++n) {
    const QuadResult term =
        integrate(integrand, n * kPi, (n + 1) * kPi, opts.abs_tol * 0.05);
    terms.push_back(term.value);
    inner_err += term.error;
    if (n + 1 >= opts.min_intervals && (n % 4 == 3)) {
      auto [est, err] = euler_best(terms);
      const double drift = std::fabs(est - best);  // vs previous round
      best = est;
      best_err = std::max(err, drift);
      if (best_err <= 0.5 * opts.abs_tol) {
        converged = true;
        ++n;
        break;
      }
    }
  }
  if (!converged) {
    auto [est, err] = euler_best(terms);
    best_err = std::max(err, std::fabs(est - best));
    best = est;
  }

  CorrectionResult out;
  out.value = 2.0 / kPi * best;
  out.error = 2.0 / kPi * (best_err + inner_err);
  out.truncated = !converged;
  out.intervals = n;
  if (!converged && out.error > 1e3 * opts.abs_tol) {
    throw ConvergenceError(
        "screening_correction: oscillatory quadrature not converged after " +
            std::to_string(opts.max_intervals) +
            " intervals (raise max_intervals for this r); achieved " +
            std::to_string(out.error),
        out.error);
  }
  return out;
}

PotentialSample phi_r(double r_m, const ParticleRegistry& reg,
                      const PhysicalConstants& consts, PotentialMode mode,
                      const CoulombOptions& opts) {
  if (!(r_m > 0.0)) {
    throw ValidationError("phi_r: r must be > 0");
  }
  const double rho = r_m / electron_compton_m(consts);
  const CorrectionResult corr =
      screening_correction(rho, reg, consts, mode, opts);
  PotentialSample s;
  s.r_over_compton = rho;
  s.correction = corr.value;
  s.phi_volts =
      consts.e / (4.0 * kPi * consts.eps0 * r_m) * (1.0 + corr.value);
  s.method = mode == PotentialMode::full ? PotentialMethod::numeric_full
                                         : PotentialMethod::numeric_linearized;
  s.error_estimate = corr.error;
  s.truncated = corr.truncated;
  return s;
}

double phi_k(double kmag_per_m, const ParticleRegistry& reg,
             const PhysicalConstants& consts, double abs_tol) {
  if (!(kmag_per_m > 0.0)) {
    throw ValidationError("phi_k: wavenumber must be > 0");
  }
  const double q_gev = kmag_per_m * consts.hbar_c_gev_m();
  const Wavevector k2 = wavevector_from_k2(-q_gev * q_gev);
  const double eps = eps0_of_k2(k2, reg, consts, abs_tol);
  return consts.e / (kmag_per_m * kmag_per_m * eps);
}

PotentialSample phi_small_r(double r_m, const PhysicalConstants& consts) {
  if (!(r_m > 0.0)) {
    throw ValidationError("phi_small_r: r must be > 0");
  }
  const double rho = r_m / electron_compton_m(consts);
  PotentialSample s;
  s.r_over_compton = rho;
  s.correction = 2.0 * consts.alpha / (3.0 * kPi) *
                 (std::log(1.0 / rho) - std::numbers::egamma - 5.0 / 6.0);
  s.phi_volts =
      consts.e / (4.0 * kPi * consts.eps0 * r_m) * (1.0 + s.correction);
  s.method = PotentialMethod::asymptotic_small_r;
  return s;
}

PotentialSample phi_large_r(double r_m, const PhysicalConstants& consts) {
  if (!(r_m > 0.0)) {
    throw ValidationError("phi_large_r: r must be > 0");
  }
  const double rho = r_m / electron_compton_m(consts);
  PotentialSample s;
  s.r_over_compton = rho;
  s.correction = consts.alpha / (4.0 * std::sqrt(kPi)) *
                 std::exp(-2.0 * rho) / std::pow(rho, 1.5);
  s.phi_volts =
      consts.e / (4.0 * kPi * consts.eps0 * r_m) * (1.0 + s.correction);
  s.method = PotentialMethod::asymptotic_large_r;
  return s;
}

} // namespace vacpol
