#pragma once

// Independent fixed-grid reference implementations for the test suite.
// Nothing here shares a code path with the library's adaptive quadrature
// or the oscillatory sine transform it checks.

namespace oracle {

// Fine-structure constant recomputed from the same CODATA inputs.
double alpha_si();

// Composite Simpson of int_0^1 x(1-x) ln|1 - s x(1-x)| dx with the stated
// number of grid points per segment; for s > 4 the domain is split at the
// two roots of 1 - s x(1-x) = 0. The singular endpoints carry zero weight
// (integrable log).
double simpson_loop_real(double s, int points_per_segment = 1000001);

// Closed-form imaginary part for s > 4 with the -i pi branch:
// -pi (beta/6)(1 + 2/s), beta = sqrt(1 - 4/s); zero otherwise.
double loop_imag_closed(double s);

// Linearized screening correction from the pair-threshold exponential
// representation,
//   C(rho) = (2 alpha / 3 pi) int_1^inf dt e^{-2 rho t} (1 + 1/(2t^2))
//            sqrt(t^2-1)/t^2,
// evaluated on a fixed Gauss-Legendre grid after t = 1 + v^2.
double uehling_correction(double rho);

// (alpha / 3 pi) S [2 ln(cutoff/m) - (5/3 if include_a)]
double pi2_closed(double cutoff_gev, double charge_sum, double mass_gev,
                  bool include_a);

// mbar exp(3 pi / (2 alpha S))
double landau_closed(double charge_sum, double mbar_gev);

} // namespace oracle
