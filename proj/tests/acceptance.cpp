// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its own runtime budget.

#include "oracles.hpp"
#include "vacpol/coulomb.hpp"
#include "vacpol/fields.hpp"
#include "vacpol/landau.hpp"
#include "vacpol/polarization.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef VACPOL_CLI_PATH
#define VACPOL_CLI_PATH ""
#endif

using namespace vacpol;

namespace {

const PhysicalConstants kC = make_si_constants();

ParticleRegistry electron_only() {
  return ParticleRegistry::from_species(
      {{"electron", -1.0, kElectronMassGev, 1}});
}

int failures = 0;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }
};

void run_criterion(int number, const std::string& title, double budget_s,
                   const std::function<void(Check&)>& body) {
  Check check;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  check.expect(elapsed < budget_s,
               "runtime " + std::to_string(elapsed) + " s over budget " +
                   std::to_string(budget_s) + " s");
  if (!check.ok) ++failures;
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n",
              check.ok ? "PASS" : "FAIL", number, title.c_str(), elapsed,
              check.ok ? "" : " -- ", check.ok ? "" : check.detail.str().c_str());
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------

void criterion_1(Check& c) {
  for (const auto& reg : {preset(Preset::sm_paper), electron_only()}) {
    const auto k0 = wavevector_from_k2(0.0);
    const auto dp = delta_pi_exact(k0, reg, kC);
    c.expect(std::abs(dp) <= 1e-12, "delta_pi(0) = " + fmt(std::abs(dp)));
    c.expect(eps0_of_k2(k0, reg, kC) == kC.eps0, "eps0(0) != eps0 exactly");
    c.expect(alpha_eff(k0, reg, kC) == std::complex<double>(kC.alpha, 0.0),
             "alpha_eff(0) != alpha exactly");
  }
}

void criterion_2(Check& c) {
  std::vector<ChargedSpecies> species = {
      {"electron", -1.0, kElectronMassGev, 1}};
  for (const auto& sp : preset(Preset::sm_fermions).species()) {
    species.push_back(sp);
  }
  for (const auto& sp : species) {
    const auto reg = ParticleRegistry::from_species({sp});
    for (double ratio : {1e4, 1e6, 1e8}) {
      const auto k2 =
          wavevector_from_k2(-ratio * sp.mass_gev * sp.mass_gev);
      const double exact = delta_pi_exact(k2, reg, kC).real();
      const double asym = delta_pi_asymptotic(k2, reg, kC);
      const double dev = std::fabs(asym - exact) / exact;
      c.expect(dev <= 0.01, sp.name + " ratio " + fmt(ratio) +
                                ": exact/asymptotic deviation " + fmt(dev));
      // certify the quadrature against the fixed-grid oracle
      const double s = -ratio;
      const double ref = 2.0 * oracle::alpha_si() / std::numbers::pi *
                         sp.multiplicity * sp.charge_over_e *
                         sp.charge_over_e * oracle::simpson_loop_real(s);
      c.expect(std::fabs(exact - ref) <= 1e-8 * std::fabs(ref),
               sp.name + ": quadrature vs Simpson oracle " +
                   fmt(std::fabs(exact - ref) / std::fabs(ref)));
    }
  }
}

void criterion_3(Check& c) {
  const auto reg = preset(Preset::sm_paper);
  const auto res = solve_landau_pole(reg, kC);
  c.expect(res.lambda_l_gev >= 1e29 && res.lambda_l_gev <= 1e31,
           "lambda_L = " + fmt(res.lambda_l_gev) + " GeV outside [1e29,1e31]");
  const double round_trip = pi2_zero(res.lambda_l_gev, reg, kC, false);
  c.expect(std::fabs(round_trip - 1.0) <= 1e-9,
           "pi2_zero(lambda_L) = 1 " + fmt(round_trip - 1.0));
  const double closure = semiclassical_closure(res, kC);
  c.expect(std::fabs(closure - 1.0) <= 1e-9,
           "closure f 4 pi alpha 9 = " + fmt(closure));
}

void criterion_4(Check& c) {
  const std::complex<double> dp{0.3, 0.0};
  const auto closed = propagator_closed_form(-1.0, 1e-9, dp);
  const auto partial = propagator_partial_sum(-1.0, 1e-9, dp, 40);
  const double rel = std::abs(partial - closed) / std::abs(closed);
  c.expect(rel <= 1e-6, "partial sum deviation " + fmt(rel));
  bool threw = false;
  try {
    propagator_partial_sum(-1.0, 1e-9, {1.0, 0.0}, 10);
  } catch (const ConvergenceError&) {
    threw = true;
  }
  c.expect(threw, "divergence at delta_pi = 1 not signalled");
  threw = false;
  try {
    propagator_partial_sum(-1.0, 1e-9, {1.2, 0.0}, 10);
  } catch (const ConvergenceError&) {
    threw = true;
  }
  c.expect(threw, "divergence at delta_pi = 1.2 not signalled");
}

void criterion_5(Check& c) {
  const auto reg = electron_only();
  const double compton = electron_compton_m(kC);

  const auto near = phi_r(0.001 * compton, reg, kC, PotentialMode::linearized);
  const auto near_asym = phi_small_r(0.001 * compton, kC);
  const double near_dev =
      std::fabs(near.correction - near_asym.correction) / near.correction;
  c.expect(near_dev <= 0.05,
           "small-r deviation " + fmt(near_dev) + " at rho = 0.001");

  const auto far = phi_r(5.0 * compton, reg, kC, PotentialMode::linearized);
  const auto far_asym = phi_large_r(5.0 * compton, kC);
  const double far_dev =
      std::fabs(far.correction - far_asym.correction) / far.correction;
  c.expect(far_dev <= 0.10,
           "large-r deviation " + fmt(far_dev) + " at rho = 5");

  CoulombOptions base;
  CoulombOptions tight;
  tight.abs_tol = base.abs_tol / 2.0;
  tight.max_intervals = base.max_intervals * 2;
  for (double rho : {0.01, 0.1, 1.0, 5.0, 10.0}) {
    const auto a =
        phi_r(rho * compton, reg, kC, PotentialMode::linearized, base);
    const auto b =
        phi_r(rho * compton, reg, kC, PotentialMode::linearized, tight);
    const double drift =
        std::fabs(a.phi_volts - b.phi_volts) / std::fabs(b.phi_volts);
    c.expect(drift <= 1e-8,
             "tolerance-halving drift " + fmt(drift) + " at rho " + fmt(rho));
  }
}

void criterion_6(Check& c) {
  std::mt19937_64 rng(60001);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const auto reg = electron_only();
  int tested = 0;
  for (int trial = 0; tested < 100; ++trial) {
    Vec3 k{uni(rng), uni(rng), uni(rng)};
    const double kn = norm(k);
    if (kn < 0.1) continue;
    const double kscale = std::pow(10.0, 5.0 + 3.0 * std::fabs(uni(rng)));
    k = {k.x * kscale / kn, k.y * kscale / kn, k.z * kscale / kn};
    CVec3 e{{uni(rng), uni(rng)}, {uni(rng), uni(rng)}, {uni(rng), uni(rng)}};
    const cplx ke = dot(k, e);
    const double k2 = kscale * kscale;
    e = {e.x - ke * k.x / k2, e.y - ke * k.y / k2, e.z - ke * k.z / k2};
    if (norm(e) < 1e-3) continue;
    const auto w = make_plane_wave(k, e, kC);
    const auto r = maxwell_residual(w, 0.0, {});
    c.expect(r.gauss <= 1e-12 && r.ampere <= 1e-12,
             "free-wave residuals " + fmt(r.gauss) + ", " + fmt(r.ampere));
    c.expect(norm(w.d0) > 0.0 && norm(w.h0) > 0.0, "D or H vanished");

    if (tested % 10 == 0) {
      const auto det =
          make_wave_with_omega(k, e, 0.5 * kscale * kC.c, reg, kC);
      const auto rd = maxwell_residual(det, 0.0, {});
      c.expect(rd.ampere > 1e-3, "detuned residual " + fmt(rd.ampere));
    }
    ++tested;
  }
}

void criterion_7(Check& c) {
  std::mt19937_64 rng(70001);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  auto rc = [&]() { return cplx{uni(rng), uni(rng)}; };
  auto rfour = [&]() { return FourVector{rc(), rc(), rc(), rc()}; };
  auto vnorm = [](const FourVector& v) {
    return std::sqrt(std::norm(v.t) + std::norm(v.x) + std::norm(v.y) +
                     std::norm(v.z));
  };

  for (int trial = 0; trial < 100; ++trial) {
    // Eq-A2 style contraction: matrix route vs componentwise assembly
    const CVec3 e{rc(), rc(), rc()};
    const CVec3 b{rc(), rc(), rc()};
    const FourVector k4 = rfour();
    const auto t = FieldTensor::from_eb(e, b, kC);
    const auto matrix_route = contract_kf(k4, t);
    const cplx i{0.0, 1.0};
    const FourVector component_route{
        -i * (k4.x * e.x + k4.y * e.y + k4.z * e.z) / kC.c,
        i * k4.t * e.x / kC.c + i * (k4.y * b.z - k4.z * b.y),
        i * k4.t * e.y / kC.c + i * (k4.z * b.x - k4.x * b.z),
        i * k4.t * e.z / kC.c + i * (k4.x * b.y - k4.y * b.x)};
    const FourVector diff{matrix_route.t - component_route.t,
                          matrix_route.x - component_route.x,
                          matrix_route.y - component_route.y,
                          matrix_route.z - component_route.z};
    c.expect(vnorm(diff) <= 1e-12 * vnorm(component_route),
             "contraction routes differ by " +
                 fmt(vnorm(diff) / vnorm(component_route)));

    // tensor invariant
    const cplx inv = t.invariant_density(kC);
    const cplx direct = kC.eps0 * dot(e, e) - dot(b, b) / kC.mu0;
    c.expect(std::abs(inv - direct) <= 1e-12 * std::abs(direct),
             "tensor invariant deviation");

    // Ward transversality and gauge invariance
    const FourVector k = rfour();
    const FourVector a = rfour();
    const auto j = fermion_current(k, a, 0.3, kC);
    c.expect(std::abs(inner(k, j)) <= 1e-12 * vnorm(k) * vnorm(j),
             "k.j = " + fmt(std::abs(inner(k, j))));
    const cplx lambda = rc();
    const FourVector shifted{a.t + lambda * k.t, a.x + lambda * k.x,
                             a.y + lambda * k.y, a.z + lambda * k.z};
    const auto j2 = fermion_current(k, shifted, 0.3, kC);
    const FourVector dj{j.t - j2.t, j.x - j2.x, j.y - j2.y, j.z - j2.z};
    c.expect(vnorm(dj) <= 1e-12 * vnorm(j), "gauge shift changed the current");

    // interaction identity
    const auto pair = lagrangian_identity_check(k, a, 0.3, kC);
    c.expect(std::abs(pair.interaction - pair.em) <=
                 1e-12 * std::abs(pair.em),
             "interaction identity deviation " +
                 fmt(std::abs(pair.interaction - pair.em) /
                     std::abs(pair.em)));
  }
}

void criterion_8(Check& c) {
  const double m2 = kElectronMassGev * kElectronMassGev;
  const auto reg = electron_only();
  double err = 0.0;
  const auto above =
      delta_pi_exact(wavevector_from_k2(9.0 * m2), reg, kC, 1e-12, &err);
  c.expect(above.imag() < 0.0, "Im delta_pi at ratio 9 is " + fmt(above.imag()));
  c.expect(err <= 1e-8, "quadrature error estimate " + fmt(err));
  const auto below = delta_pi_exact(wavevector_from_k2(2.0 * m2), reg, kC);
  c.expect(below.imag() == 0.0, "Im delta_pi below threshold nonzero");
}

void criterion_9(Check& c) {
  if (std::string(VACPOL_CLI_PATH).empty()) {
    c.expect(false, "CLI path not configured");
    return;
  }
  const std::vector<std::string> commands = {
      "sweep --quantity delta_pi --preset sm_paper --from 0.001 --to 100 "
      "--points 17 --scale log",
      "sweep --quantity phi_r --preset sm_paper --from 0.1 --to 2 --points 4 "
      "--mode linearized",
      "landau --preset sm_fermions",
      "potential --preset sm_paper --from 0.5 --to 5 --points 3 --mode full",
      "wave-check --k 0,0,1e7 --e0 1,0,0",
      "registry dump --preset sm_fermions",
  };
  int idx = 0;
  for (const auto& cmd : commands) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const std::string path = "acc_out_" + std::to_string(idx) + "_" +
                               std::to_string(run) + ".txt";
      const std::string full = std::string(VACPOL_CLI_PATH) + " " + cmd +
                               " > " + path + " 2>/dev/null";
      const int rc = std::system(full.c_str());
      (void)rc;
      std::ifstream in(path, std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      outputs[run] = buf.str();
      std::remove(path.c_str());
    }
    c.expect(!outputs[0].empty(), "no output from: " + cmd);
    c.expect(outputs[0] == outputs[1], "outputs differ for: " + cmd);
    ++idx;
  }
}

} // namespace

int main() {
  run_criterion(1, "on-shell normalization", 1.0, criterion_1);
  run_criterion(2, "exact vs asymptotic polarizability per species", 10.0,
                criterion_2);
  run_criterion(3, "Landau pole scale, round trip and closure", 1.0,
                criterion_3);
  run_criterion(4, "propagator geometric series", 1.0, criterion_4);
  run_criterion(5, "screened Coulomb asymptotics and stability", 30.0,
                criterion_5);
  run_criterion(6, "free-wave source cancellation", 1.0, criterion_6);
  run_criterion(7, "tensor and current identities", 1.0, criterion_7);
  run_criterion(8, "timelike branch of the polarizability", 1.0, criterion_8);
  run_criterion(9, "deterministic CLI output", 30.0, criterion_9);

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", failures);
  }
  return failures;
}
