#pragma once

#include "vacpol/constants.hpp"
#include "vacpol/registry.hpp"

#include <complex>
#include <optional>

namespace vacpol {

/// A = exp(5/3), the constant mass shift of the asymptotic log form.
double log_mass_shift_a();

/// Pole guard: operations that divide by (1 - delta_pi) signal PoleError
/// when |1 - delta_pi| drops below this instead of returning huge values.
inline constexpr double kPoleProximity = 1e-9;

struct PolarizationResult {
  Wavevector k2;
  std::complex<double> delta_pi;  // dimensionless reduction in polarizability
  double eps0_of_k2;              // F/m, eps0 * (1 - Re delta_pi)
  double mu0_of_k2;               // H/m, 1 / (c^2 eps0_of_k2)
  std::complex<double> alpha_eff; // alpha / (1 - delta_pi)
  std::optional<double> z3_at_cutoff;
  double quadrature_error = 0.0;  // achieved absolute estimate on delta_pi
};

struct LoopIntegral {
  std::complex<double> value;
  double error;  // absolute estimate on the real (quadrature) part
};

/// Dimensionless single-species x-integral
///   L(s) = int_0^1 dx x(1-x) ln[1 - s x(1-x)],  s = k2 / m^2,
/// real for s <= 4. For s > 4 the log argument turns negative between the
/// roots of 1 - s x(1-x); the branch inherited from k^2 + i eta gives
/// Im ln(-|a|) = -pi there, and the quadrature splits at both roots.
LoopIntegral loop_integral(double s, double abs_tol = 1e-12);

/// One-loop vacuum polarizability reduction, Feynman-parameter form:
///   delta_pi(k2) = (2 alpha / pi) sum_j w_j L(k2 / m_j^2),
/// with w_j = multiplicity_j (q_j/e)^2. Positive for spacelike k2; complex
/// above the pair threshold. Override registries use the mean mass for
/// every unit of charge sum.
std::complex<double> delta_pi_exact(const Wavevector& k2,
                                    const ParticleRegistry& reg,
                                    const PhysicalConstants& consts,
                                    double abs_tol = 1e-12,
                                    double* error_out = nullptr);

/// Asymptotic log form, valid for |k2| >> m_j^2:
///   (alpha / 3 pi) sum_j w_j ln(|k2| / (A m_j^2)),  A = exp(5/3).
/// Rejects k2 = 0.
double delta_pi_asymptotic(const Wavevector& k2, const ParticleRegistry& reg,
                           const PhysicalConstants& consts);

/// On-shell polarizability against a hard cutoff:
///   (alpha / 3 pi) sum_j w_j ln(cutoff^2 / (A? m_j^2)),
/// with the A = exp(5/3) shift present iff include_a. The A-free variant on
/// an override registry is the form behind the quoted Landau-pole scale.
/// Rejects cutoffs at or below the heaviest mass scale.
double pi2_zero(double cutoff_gev, const ParticleRegistry& reg,
                const PhysicalConstants& consts, bool include_a);

/// Field-strength constant Z3 = 1 - pi2_zero(cutoff).
double z3_at_cutoff(double cutoff_gev, const ParticleRegistry& reg,
                    const PhysicalConstants& consts, bool include_a = false);

/// Running permittivity eps0(k2) = eps0 (1 - Re delta_pi). Signals
/// PoleError near delta_pi = 1.
double eps0_of_k2(const Wavevector& k2, const ParticleRegistry& reg,
                  const PhysicalConstants& consts, double abs_tol = 1e-12);

/// Running permeability, 1 / (c^2 eps0(k2)); eps0(k2) mu0(k2) c^2 = 1.
double mu0_of_k2(const Wavevector& k2, const ParticleRegistry& reg,
                 const PhysicalConstants& consts, double abs_tol = 1e-12);

/// Running coupling alpha_eff(k2) = alpha / (1 - delta_pi).
std::complex<double> alpha_eff(const Wavevector& k2,
                               const ParticleRegistry& reg,
                               const PhysicalConstants& consts,
                               double abs_tol = 1e-12);

/// Evaluate delta_pi once and assemble the derived running quantities.
PolarizationResult evaluate(const Wavevector& k2, const ParticleRegistry& reg,
                            const PhysicalConstants& consts,
                            double abs_tol = 1e-12);

struct PropagatorValue {
  Wavevector k2;
  double eta;
  std::complex<double> diagonal;  // coefficient of -g^{mu nu}
};

/// Photon propagator diagonal -1 / (eps0rel(k2) (k2 + i eta)) in GeV^-2,
/// with eps0rel = 1 - delta_pi (the permittivity in units of eps0).
PropagatorValue propagator(const Wavevector& k2, double eta,
                           const ParticleRegistry& reg,
                           const PhysicalConstants& consts,
                           double abs_tol = 1e-12);

/// Partial geometric sum -(1/(k2 + i eta)) sum_{n=0}^{N} delta_pi^n in the
/// same normalization; approaches the closed form as N grows when
/// |delta_pi| < 1, and throws ConvergenceError for |delta_pi| >= 1.
std::complex<double> propagator_series(const Wavevector& k2, double eta,
                                       int n_terms,
                                       const ParticleRegistry& reg,
                                       const PhysicalConstants& consts,
                                       double abs_tol = 1e-12);

/// Kernels taking delta_pi directly (synthetic values, tests, reuse).
std::complex<double> propagator_closed_form(double k2_gev2, double eta,
                                            std::complex<double> delta_pi);
std::complex<double> propagator_partial_sum(double k2_gev2, double eta,
                                            std::complex<double> delta_pi,
                                            int n_terms);

} // namespace vacpol
