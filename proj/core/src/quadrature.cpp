#include "vacpol/quadrature.hpp"

#include "vacpol/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace vacpol {

namespace {

// QUADPACK dqk15 nodes and weights (nonnegative half).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double m = 0.5 * (a + b);

  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(m - h * kXgk[i]);
    fv[14 - i] = f(m + h * kXgk[i]);
  }
  fv[7] = f(m);

  double k15 = kWgk[7] * fv[7];
  double g7 = kWg[3] * fv[7];
  double resabs = kWgk[7] * std::fabs(fv[7]);
  for (int i = 0; i < 7; ++i) {
    k15 += kWgk[i] * (fv[i] + fv[14 - i]);
    resabs += kWgk[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
  }
  for (int i = 0; i < 3; ++i) {
    const int j = 2 * i + 1;  // Gauss nodes sit at the odd Kronrod indices
    g7 += kWg[i] * (fv[j] + fv[14 - j]);
  }

  const double mean = 0.5 * k15;
  double resasc = kWgk[7] * std::fabs(fv[7] - mean);
  for (int i = 0; i < 7; ++i) {
    resasc += kWgk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));
  }

  const double value = k15 * h;
  resabs *= std::fabs(h);
  resasc *= std::fabs(h);
  double err = std::fabs((k15 - g7) * h);
  // QUADPACK error heuristic
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps50 = 50.0 * 2.220446049250313e-16 * resabs;
  err = std::max(err, eps50);
  return {a, b, value, err};
}

} // namespace

QuadResult gk15_panel(const std::function<double(double)>& f, double a,
                      double b) {
  Panel p = eval_panel(f, a, b);
  return {p.value, p.error};
}

QuadResult integrate_segments(const std::function<double(double)>& f,
                              std::span<const double> points, double abs_tol,
                              int max_panels) {
  std::priority_queue<Panel> heap;
  double total = 0.0, total_err = 0.0;
  int n_panels = 0;
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i] == points[i + 1]) continue;
    Panel p = eval_panel(f, points[i], points[i + 1]);
    total += p.value;
    total_err += p.error;
    heap.push(p);
    ++n_panels;
  }
  while (total_err > abs_tol && !heap.empty()) {
    if (n_panels >= max_panels) {
      throw ConvergenceError(
          "quadrature did not reach tolerance " + std::to_string(abs_tol) +
              " within " + std::to_string(max_panels) +
              " panels; achieved error estimate " + std::to_string(total_err),
          total_err);
    }
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) continue;  // interval exhausted
    Panel left = eval_panel(f, worst.a, mid);
    Panel right = eval_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++n_panels;
  }
  return {total, total_err};
}

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol, int max_panels) {
  const double pts[2] = {a, b};
  return integrate_segments(f, pts, abs_tol, max_panels);
}

} // namespace vacpol
