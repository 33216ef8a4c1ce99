#pragma once

#include "vacpol/constants.hpp"
#include "vacpol/registry.hpp"

namespace vacpol {

struct LandauResult {
  double lambda_l_gev;   // hbar c Lambda_L in GeV
  double f_factor;       // ln(Lambda_L^2 / mbar^2) / (12 pi^2)
  double mean_mass_gev;  // mbar c^2 used in the log
  double charge_sum;     // sum q_j^2 / e^2
};

/// Solve the pole condition (alpha / 3 pi) S ln(Lambda^2 / mbar^2) = 1 (the
/// A-free on-shell form, which is what the quoted 1e30 GeV follows from).
/// Override registries invert it in closed form,
///   hbar c Lambda_L = mbar exp(3 pi / (2 alpha S));
/// per-species registries bisect pi2_zero(Lambda) = 1 instead.
LandauResult solve_landau_pole(const ParticleRegistry& reg,
                               const PhysicalConstants& consts);

/// f = ln(Lambda_L^2 / mbar^2) / (12 pi^2), recomputed from the result
/// fields (consistency route for the stored f_factor).
double geometric_factor(const LandauResult& res);

/// Closure of the semiclassical sum rule: f * 4 pi alpha * charge_sum,
/// equal to 1 for a solved result.
double semiclassical_closure(const LandauResult& res,
                             const PhysicalConstants& consts);

} // namespace vacpol
