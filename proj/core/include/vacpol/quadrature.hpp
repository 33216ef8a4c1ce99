#pragma once

#include <functional>
#include <span>

namespace vacpol {

struct QuadResult {
  double value;
  double error;  // absolute error estimate
};

/// Adaptive 15-point Gauss-Kronrod on [a, b] to an absolute tolerance.
/// Panels are bisected worst-error-first; throws ConvergenceError with the
/// achieved estimate if the panel budget is exhausted.
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol, int max_panels = 4000);

/// Same, with interior breakpoints (e.g. integrable log singularities whose
/// locations are known); the tolerance is shared across segments.
QuadResult integrate_segments(const std::function<double(double)>& f,
                              std::span<const double> points, double abs_tol,
                              int max_panels = 4000);

/// Single non-adaptive G7/K15 panel.
QuadResult gk15_panel(const std::function<double(double)>& f, double a,
                      double b);

} // namespace vacpol
