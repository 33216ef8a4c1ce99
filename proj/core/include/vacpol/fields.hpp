#pragma once

#include "vacpol/constants.hpp"
#include "vacpol/registry.hpp"

#include <array>
#include <complex>

namespace vacpol {

using cplx = std::complex<double>;

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

/// Complex phasor amplitude of a single Fourier mode.
struct CVec3 {
  cplx x = 0, y = 0, z = 0;
};

Vec3 cross(const Vec3& a, const Vec3& b);
CVec3 cross(const Vec3& a, const CVec3& b);
cplx dot(const Vec3& a, const CVec3& b);
cplx dot(const CVec3& a, const CVec3& b);  // unconjugated
double norm(const Vec3& a);
double norm(const CVec3& a);  // sqrt(sum |c_i|^2)
CVec3 scaled(const CVec3& a, cplx s);

/// Contravariant components, metric (+,-,-,-).
struct FourVector {
  cplx t = 0, x = 0, y = 0, z = 0;
};

/// Minkowski product a^0 b^0 - a.b (no conjugation).
cplx inner(const FourVector& a, const FourVector& b);

/// Antisymmetric field tensor, stored contravariant: F^{0i} = -E_i/c,
/// F^{xy} = -B_z (cyclic).
struct FieldTensor {
  std::array<std::array<cplx, 4>, 4> f{};

  static FieldTensor from_eb(const CVec3& e, const CVec3& b,
                             const PhysicalConstants& consts);
  /// Single-mode tensor F^{ab} = -i (k^a A^b - k^b A^a).
  static FieldTensor from_potential(const FourVector& k, const FourVector& a);

  /// -F_{nu mu} F^{nu mu} / (2 mu0) = eps0 E^2 - B^2/mu0 (complex squares).
  cplx invariant_density(const PhysicalConstants& consts) const;
};

/// Single on-shell (or deliberately detuned) plane-wave mode with the
/// constitutive fields D = eps0(k2) E, H = c^2 eps0(k2) B attached.
struct PlaneWaveField {
  Vec3 k_vec;      // 1/m
  double omega;    // rad/s
  CVec3 e0;        // V/m
  CVec3 b0;        // T, (k x E)/omega
  CVec3 d0;        // C/m^2
  CVec3 h0;        // A/m
  double k2_si;    // omega^2/c^2 - |k|^2, 1/m^2
};

/// On-shell wave: omega = |k| c, B = (k x E)/omega, D = eps0 E, H = B/mu0.
/// E must be transverse; a longitudinal component is rejected with the
/// offending dot product in the message.
PlaneWaveField make_plane_wave(const Vec3& k_vec, const CVec3& e0,
                               const PhysicalConstants& consts);

/// Construction bypass with a forced frequency: k2 != 0, so D and H pick up
/// the running eps0(k2) of the given registry.
PlaneWaveField make_wave_with_omega(const Vec3& k_vec, const CVec3& e0,
                                    double omega, const ParticleRegistry& reg,
                                    const PhysicalConstants& consts);

/// Residuals of the k-space source equations, relative:
///   gauss  = |i k.D - rho|       / (|k| |D|)
///   ampere = |i k x H + i w D - j| / (w |D|)
/// Zero field gives zero residuals.
struct MaxwellResidual {
  double gauss;
  double ampere;
};
MaxwellResidual maxwell_residual(const PlaneWaveField& w, cplx rho,
                                 const CVec3& j);

/// Matrix route of the tensor contraction: component nu of
/// -i F_{nu mu} k^mu, equal to (-i k.E/c, i w E/c^2 + i k x B).
FourVector contract_kf(const FourVector& k, const FieldTensor& f);

/// Induced current j^mu = -(pi_value / mu0) (k^2 g^{mu nu} - k^mu k^nu) A_nu;
/// transverse (k.j = 0) and gauge invariant by the Ward structure.
FourVector fermion_current(const FourVector& k, const FourVector& a,
                           double pi_value, const PhysicalConstants& consts);

/// Two independent routes to the interaction energy density:
///   interaction = -j.A            (current route)
///   em          = pi_value * (eps0 E^2 - B^2/mu0)  (tensor route)
/// built from F = -i k (x) A + i A (x) k; the pair must agree.
struct IdentityPair {
  cplx interaction;
  cplx em;
};
IdentityPair lagrangian_identity_check(const FourVector& k,
                                       const FourVector& a, double pi_value,
                                       const PhysicalConstants& consts);

/// Boost by velocity beta = v/c (vector); standard four-vector and E/B
/// field transformation rules.
FourVector boost(const FourVector& a, const Vec3& beta);
PlaneWaveField boost_wave(const PlaneWaveField& w, const Vec3& beta,
                          const ParticleRegistry& reg,
                          const PhysicalConstants& consts);

} // namespace vacpol
