#pragma once

#include "vacpol/constants.hpp"
#include "vacpol/registry.hpp"

namespace vacpol {

enum class PotentialMethod {
  numeric_full,
  numeric_linearized,
  asymptotic_small_r,
  asymptotic_large_r,
};

enum class PotentialMode { full, linearized };

struct PotentialSample {
  double r_over_compton;  // r m_e c / hbar
  double phi_volts;       // (e / 4 pi eps0 r) (1 + correction)
  double correction;      // (phi - phi_bare) / phi_bare, > 0 for r > 0
  PotentialMethod method;
  double error_estimate = 0.0;  // absolute, on the correction (numeric only)
  bool truncated = false;       // interval cap reached before convergence
};

struct CoulombOptions {
  double abs_tol = 1e-10;  // absolute tolerance on the correction
  int max_intervals = 512; // cap on sine half-periods (sets the q cutoff)
  int min_intervals = 16;
};

/// k-space potential of a static unit charge, phi(k) = e / (k^2 eps0(-k^2))
/// in V m^3; kmag in 1/m. Signals PoleError at extreme kmag.
double phi_k(double kmag_per_m, const ParticleRegistry& reg,
             const PhysicalConstants& consts, double abs_tol = 1e-12);

/// r-space screened potential. The bare term is removed analytically via
/// int_0^inf sin(qr)/q dq = pi/2, leaving
///   correction = (2/pi) int_0^inf dq sin(qr)/q g(q),
/// g = delta_pi / (1 - delta_pi) in full mode, g = delta_pi linearized.
/// The oscillatory integral is partitioned at the zeros of sin(qr) and the
/// alternating interval sums are Euler-accelerated.
PotentialSample phi_r(double r_m, const ParticleRegistry& reg,
                      const PhysicalConstants& consts, PotentialMode mode,
                      const CoulombOptions& opts = {});

/// Short-distance form (electron-positron pairs only):
///   correction = (2 alpha / 3 pi) (ln(hbar / m_e c r) - gamma - 5/6).
PotentialSample phi_small_r(double r_m, const PhysicalConstants& consts);

/// Long-distance form (electron-positron pairs only):
///   correction = (alpha / 4 sqrt(pi)) e^{-2 m_e c r / hbar} / (m_e c r / hbar)^{3/2}.
PotentialSample phi_large_r(double r_m, const PhysicalConstants& consts);

/// Reduced electron Compton wavelength hbar / (m_e c) in meters.
double electron_compton_m(const PhysicalConstants& consts);

/// Dimensionless core of phi_r on rho = r m_e c / hbar; exposed for sweeps
/// and tests.
struct CorrectionResult {
  double value;
  double error;
  bool truncated;
  int intervals;
};
CorrectionResult screening_correction(double rho, const ParticleRegistry& reg,
                                      const PhysicalConstants& consts,
                                      PotentialMode mode,
                                      const CoulombOptions& opts = {});

} // namespace vacpol
