#pragma once

#include "vacpol/errors.hpp"

namespace vacpol {

// SI values frozen at build time (CODATA 2018). All of the loop integrals
// work in GeV-based natural quantities; SI enters only through this table
// and in the Coulomb-potential output.
namespace si {
inline constexpr double hbar = 1.054571817e-34;   // J s
inline constexpr double c = 299792458.0;          // m / s
inline constexpr double e = 1.602176634e-19;      // C
inline constexpr double eps0 = 8.8541878128e-12;  // F / m
} // namespace si

/// Electron rest energy in GeV; sets the Compton scale of the screened
/// Coulomb asymptotics and the default lepton entry of the presets.
inline constexpr double kElectronMassGev = 0.51099895000e-3;

struct PhysicalConstants {
  double hbar;           // J s
  double c;              // m / s
  double e;              // C
  double eps0;           // F / m
  double mu0;            // H / m, defined as 1 / (eps0 c^2)
  double alpha;          // e^2 / (4 pi eps0 hbar c), derived
  double hbar_c_gev_fm;  // hbar c in GeV fm, derived

  /// hbar c in GeV m, the conversion between GeV^2 invariants and 1/m^2.
  double hbar_c_gev_m() const { return hbar_c_gev_fm * 1e-15; }
};

/// Assemble the frozen SI table with the derived fields populated.
PhysicalConstants make_si_constants();

enum class Regime { spacelike, on_shell, timelike };

/// Lorentz-invariant photon off-shellness k^2 = omega^2/c^2 - |k|^2,
/// carried as sign(k^2) * (hbar c sqrt(|k^2|))^2 in GeV^2.
struct Wavevector {
  double k2_gev2;
  Regime regime;
};

/// Build a Wavevector from an energy scale Q = hbar c sqrt(|k^2|) >= 0:
/// k2 = -Q^2 (spacelike), +Q^2 (timelike), 0 (on shell).
Wavevector k2_from_energy(double q_gev, Regime regime);

/// Classify a raw invariant by sign.
Wavevector wavevector_from_k2(double k2_gev2);

/// sqrt(|k^2|) in GeV, the round trip of k2_from_energy.
double energy_scale_gev(const Wavevector& k);

const char* regime_name(Regime r);

} // namespace vacpol
