#include "vacpol/constants.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace vacpol {

PhysicalConstants make_si_constants() {
  PhysicalConstants k{};
  k.hbar = si::hbar;
  k.c = si::c;
  k.e = si::e;
  k.eps0 = si::eps0;
  k.mu0 = 1.0 / (si::eps0 * si::c * si::c);
  k.alpha = si::e * si::e /
            (4.0 * std::numbers::pi * si::eps0 * si::hbar * si::c);
  // J m -> GeV fm: divide by e (J/eV), 1e9 (eV/GeV), times 1e15 (fm/m)
  k.hbar_c_gev_fm = si::hbar * si::c / si::e * 1e-9 * 1e15;
  return k;
}

Wavevector k2_from_energy(double q_gev, Regime regime) {
  if (!(q_gev >= 0.0)) {
    throw ValidationError("k2_from_energy: energy scale must be >= 0, got " +
                          std::to_string(q_gev));
  }
  switch (regime) {
  case Regime::spacelike:
    return {-q_gev * q_gev, q_gev == 0.0 ? Regime::on_shell : regime};
  case Regime::timelike:
    return {q_gev * q_gev, q_gev == 0.0 ? Regime::on_shell : regime};
  case Regime::on_shell:
    if (q_gev != 0.0) {
      throw ValidationError("k2_from_energy: on-shell requires Q = 0");
    }
    return {0.0, Regime::on_shell};
  }
  throw ValidationError("k2_from_energy: unknown regime");
}

Wavevector wavevector_from_k2(double k2_gev2) {
  if (k2_gev2 < 0.0) return {k2_gev2, Regime::spacelike};
  if (k2_gev2 > 0.0) return {k2_gev2, Regime::timelike};
  return {0.0, Regime::on_shell};
}

double energy_scale_gev(const Wavevector& k) {
  return std::sqrt(std::fabs(k.k2_gev2));
}

const char* regime_name(Regime r) {
  switch (r) {
  case Regime::spacelike: return "spacelike";
  case Regime::on_shell: return "on_shell";
  case Regime::timelike: return "timelike";
  }
  return "?";
}

} // namespace vacpol
