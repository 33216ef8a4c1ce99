#include "vacpol/fields.hpp"

#include "vacpol/polarization.hpp"

#include <cmath>
#include <string>

namespace vacpol {

namespace {

const cplx kI{0.0, 1.0};

// metric signs g_00 = +1, g_ii = -1
double metric_sign(int mu) { return mu == 0 ? 1.0 : -1.0; }

CVec3 add(const CVec3& a, const CVec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

} // namespace

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

CVec3 cross(const Vec3& a, const CVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

cplx dot(const Vec3& a, const CVec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

cplx dot(const CVec3& a, const CVec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

double norm(const Vec3& a) {
  return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z);
}

double norm(const CVec3& a) {
  return std::sqrt(std::norm(a.x) + std::norm(a.y) + std::norm(a.z));
}

CVec3 scaled(const CVec3& a, cplx s) { return {a.x * s, a.y * s, a.z * s}; }

cplx inner(const FourVector& a, const FourVector& b) {
  return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

FieldTensor FieldTensor::from_eb(const CVec3& e, const CVec3& b,
                                 const PhysicalConstants& consts) {
  FieldTensor t;
  const double c = consts.c;
  const cplx ex = e.x / c, ey = e.y / c, ez = e.z / c;
  t.f = {{{0.0, -ex, -ey, -ez},
          {ex, 0.0, -b.z, b.y},
          {ey, b.z, 0.0, -b.x},
          {ez, -b.y, b.x, 0.0}}};
  return t;
}

FieldTensor FieldTensor::from_potential(const FourVector& k,
                                        const FourVector& a) {
  const cplx kc[4] = {k.t, k.x, k.y, k.z};
  const cplx ac[4] = {a.t, a.x, a.y, a.z};
  FieldTensor t;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      t.f[mu][nu] = -kI * (kc[mu] * ac[nu] - kc[nu] * ac[mu]);
    }
  }
  return t;
}

cplx FieldTensor::invariant_density(const PhysicalConstants& consts) const {
  // F_{nu mu} F^{nu mu} with complex (unconjugated) squares
  cplx ff = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      ff += metric_sign(mu) * metric_sign(nu) * f[mu][nu] * f[mu][nu];
    }
  }
  return -ff / (2.0 * consts.mu0);
}

namespace {

PlaneWaveField assemble_wave(const Vec3& k_vec, const CVec3& e0, double omega,
                             double eps_k2, const PhysicalConstants& consts) {
  PlaneWaveField w;
  w.k_vec = k_vec;
  w.omega = omega;
  w.e0 = e0;
  w.b0 = scaled(cross(k_vec, e0), 1.0 / omega);
  w.d0 = scaled(e0, eps_k2);
  w.h0 = scaled(w.b0, consts.c * consts.c * eps_k2);
  w.k2_si = omega * omega / (consts.c * consts.c) -
            (k_vec.x * k_vec.x + k_vec.y * k_vec.y + k_vec.z * k_vec.z);
  return w;
}

void require_transverse(const Vec3& k_vec, const CVec3& e0) {
  const cplx ke = dot(k_vec, e0);
  const double scale = norm(k_vec) * norm(e0);
  if (std::abs(ke) > 1e-12 * scale) {
    throw ValidationError(
        "plane wave: E0 must be transverse to k; k.E0 = " +
        std::to_string(ke.real()) + (ke.imag() < 0 ? " - " : " + ") +
        std::to_string(std::fabs(ke.imag())) + "i");
  }
}

} // namespace

PlaneWaveField make_plane_wave(const Vec3& k_vec, const CVec3& e0,
                               const PhysicalConstants& consts) {
  const double kmag = norm(k_vec);
  if (!(kmag > 0.0)) {
    throw ValidationError("plane wave: |k| must be > 0");
  }
  require_transverse(k_vec, e0);
  // on shell: k2 = 0, delta_pi(0) = 0, so D = eps0 E exactly
  return assemble_wave(k_vec, e0, kmag * consts.c, consts.eps0, consts);
}

PlaneWaveField make_wave_with_omega(const Vec3& k_vec, const CVec3& e0,
                                    double omega, const ParticleRegistry& reg,
                                    const PhysicalConstants& consts) {
  const double kmag = norm(k_vec);
  if (!(kmag > 0.0) || !(omega > 0.0)) {
    throw ValidationError("plane wave: |k| and omega must be > 0");
  }
  require_transverse(k_vec, e0);
  const double k2_si =
      omega * omega / (consts.c * consts.c) - kmag * kmag;
  const double hc = consts.hbar_c_gev_m();
  const Wavevector k2 = wavevector_from_k2(k2_si * hc * hc);
  const double eps_k2 = eps0_of_k2(k2, reg, consts);
  return assemble_wave(k_vec, e0, omega, eps_k2, consts);
}

MaxwellResidual maxwell_residual(const PlaneWaveField& w, cplx rho,
                                 const CVec3& j) {
  const cplx gauss_lhs = kI * dot(w.k_vec, w.d0) - rho;
  const CVec3 kxh = cross(w.k_vec, w.h0);
  const CVec3 ampere_lhs = {kI * kxh.x + kI * w.omega * w.d0.x - j.x,
                            kI * kxh.y + kI * w.omega * w.d0.y - j.y,
                            kI * kxh.z + kI * w.omega * w.d0.z - j.z};
  const double d_norm = norm(w.d0);
  MaxwellResidual r{0.0, 0.0};
  if (d_norm > 0.0) {
    r.gauss = std::abs(gauss_lhs) / (norm(w.k_vec) * d_norm);
    r.ampere = norm(ampere_lhs) / (w.omega * d_norm);
  } else {
    r.gauss = std::abs(gauss_lhs);
    r.ampere = norm(ampere_lhs);
  }
  return r;
}

FourVector contract_kf(const FourVector& k, const FieldTensor& t) {
  const cplx kc[4] = {k.t, k.x, k.y, k.z};
  FourVector out;
  cplx* oc[4] = {&out.t, &out.x, &out.y, &out.z};
  for (int nu = 0; nu < 4; ++nu) {
    cplx sum = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      // lower both tensor indices, contract with contravariant k
      sum += metric_sign(nu) * metric_sign(mu) * t.f[nu][mu] * kc[mu];
    }
    *oc[nu] = -kI * sum;
  }
  return out;
}

FourVector fermion_current(const FourVector& k, const FourVector& a,
                           double pi_value, const PhysicalConstants& consts) {
  const cplx k2 = inner(k, k);
  const cplx ka = inner(k, a);
  const double scale = -pi_value / consts.mu0;
  return {scale * (k2 * a.t - ka * k.t), scale * (k2 * a.x - ka * k.x),
          scale * (k2 * a.y - ka * k.y), scale * (k2 * a.z - ka * k.z)};
}

IdentityPair lagrangian_identity_check(const FourVector& k,
                                       const FourVector& a, double pi_value,
                                       const PhysicalConstants& consts) {
  IdentityPair p;
  const FourVector j = fermion_current(k, a, pi_value, consts);
  p.interaction = -inner(j, a);  // the -j.A term of the Lagrangian
  const FieldTensor f = FieldTensor::from_potential(k, a);
  p.em = pi_value * f.invariant_density(consts);
  return p;
}

FourVector boost(const FourVector& a, const Vec3& beta) {
  const double b2 = beta.x * beta.x + beta.y * beta.y + beta.z * beta.z;
  if (b2 == 0.0) return a;
  if (b2 >= 1.0) {
    throw ValidationError("boost: |beta| must be < 1");
  }
  const double gamma = 1.0 / std::sqrt(1.0 - b2);
  const cplx bp = beta.x * a.x + beta.y * a.y + beta.z * a.z;
  const cplx t = gamma * (a.t - bp);
  // spatial part: p' = p + [(gamma-1)/b2 * (beta.p) - gamma a.t] beta
  const cplx coef = (gamma - 1.0) / b2 * bp - gamma * a.t;
  return {t, a.x + coef * beta.x, a.y + coef * beta.y, a.z + coef * beta.z};
}

PlaneWaveField boost_wave(const PlaneWaveField& w, const Vec3& beta,
                          const ParticleRegistry& reg,
                          const PhysicalConstants& consts) {
  const double b2 = beta.x * beta.x + beta.y * beta.y + beta.z * beta.z;
  if (b2 == 0.0) return w;
  if (b2 >= 1.0) {
    throw ValidationError("boost_wave: |beta| must be < 1");
  }
  const double gamma = 1.0 / std::sqrt(1.0 - b2);
  const double c = consts.c;

  // wavevector transforms as (omega/c, k)
  const FourVector k4 = boost(
      {w.omega / c, cplx(w.k_vec.x), cplx(w.k_vec.y), cplx(w.k_vec.z)}, beta);
  const Vec3 k_new{k4.x.real(), k4.y.real(), k4.z.real()};
  const double omega_new = k4.t.real() * c;

  // E' = gamma (E + c beta x B) - (gamma-1)/b2 (beta.E) beta
  // B' = gamma (B - (beta/c) x E) - (gamma-1)/b2 (beta.B) beta
  const CVec3 cbxb = cross(beta, w.b0);
  const CVec3 bxe = cross(beta, w.e0);
  const cplx be = dot(beta, w.e0);
  const cplx bb = dot(beta, w.b0);
  const double par = (gamma - 1.0) / b2;
  const CVec3 e_new = add(scaled(add(w.e0, scaled(cbxb, c)), gamma),
                          scaled({beta.x * be, beta.y * be, beta.z * be}, -par));
  const CVec3 b_new = add(scaled(add(w.b0, scaled(bxe, -1.0 / c)), gamma),
                          scaled({beta.x * bb, beta.y * bb, beta.z * bb}, -par));

  // keep the transformed B rather than rebuilding it from k' x E'
  PlaneWaveField out;
  out.k_vec = k_new;
  out.omega = omega_new;
  out.e0 = e_new;
  out.b0 = b_new;
  out.k2_si = omega_new * omega_new / (c * c) -
              (k_new.x * k_new.x + k_new.y * k_new.y + k_new.z * k_new.z);
  const double hc = consts.hbar_c_gev_m();
  const double eps_k2 =
      eps0_of_k2(wavevector_from_k2(out.k2_si * hc * hc), reg, consts);
  out.d0 = scaled(e_new, eps_k2);
  out.h0 = scaled(b_new, c * c * eps_k2);
  return out;
}

} // namespace vacpol
