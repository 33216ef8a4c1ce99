#include "vacpol/landau.hpp"

#include "vacpol/polarization.hpp"

#include <cmath>
#include <numbers>

namespace vacpol {

namespace {

constexpr double kPi = std::numbers::pi;

// Bisection on log10(Lambda) of pi2_zero(Lambda, A-free) = 1; the target is
// monotone increasing in the cutoff.
double bisect_pole(const ParticleRegistry& reg,
                   const PhysicalConstants& consts) {
  double lo = -30.0;
  for (const auto& t : reg.loop_terms()) {
    lo = std::max(lo, std::log10(t.mass_gev));
  }
  lo += 1e-6;
  double hi = 300.0;  // 10^300 stays finite
  auto target = [&](double l) {
    return pi2_zero(std::pow(10.0, l), reg, consts, false) - 1.0;
  };
  if (target(lo) > 0.0 || target(hi) < 0.0) {
    throw ValidationError("solve_landau_pole: no bracket for the pole");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, std::fabs(hi));
       ++i) {
    const double mid = 0.5 * (lo + hi);
    (target(mid) < 0.0 ? lo : hi) = mid;
  }
  return std::pow(10.0, 0.5 * (lo + hi));
}

} // namespace

LandauResult solve_landau_pole(const ParticleRegistry& reg,
                               const PhysicalConstants& consts) {
  const double charge_sum = reg.effective_charge_sum();
  const double mbar = reg.mean_log_mass_gev();
  if (!(charge_sum > 0.0) || !(mbar > 0.0)) {
    throw ValidationError("solve_landau_pole: needs charge sum and mean "
                          "mass > 0");
  }
  double lambda;
  if (reg.uses_mean_mass()) {
    // closed-form inversion of (alpha / 3 pi) S ln(Lambda^2 / mbar^2) = 1
    lambda = mbar * std::exp(3.0 * kPi / (2.0 * consts.alpha * charge_sum));
  } else {
    lambda = bisect_pole(reg, consts);
  }
  LandauResult res;
  res.lambda_l_gev = lambda;
  res.mean_mass_gev = mbar;
  res.charge_sum = charge_sum;
  res.f_factor = geometric_factor(res);
  return res;
}

double geometric_factor(const LandauResult& res) {
  return 2.0 * std::log(res.lambda_l_gev / res.mean_mass_gev) /
         (12.0 * kPi * kPi);
}

double semiclassical_closure(const LandauResult& res,
                             const PhysicalConstants& consts) {
  return res.f_factor * 4.0 * kPi * consts.alpha * res.charge_sum;
}

} // namespace vacpol
