#pragma once

// Moving point dipole: resonant single-scatterer t-matrix, its first-order
// correction in the velocity, the spectral radiative momentum and the
// resulting kinematic mass shift.
//
// Lengths are in metres, so alpha and alpha0 are volumes (m^3) and Gamma is a
// length. Internally frequencies are handled as wavenumbers kappa = omega/c0.

#include <complex>

#include "zpm/linalg.hpp"

namespace zpm {

class DipoleSpec {
 public:
  /// alpha: bare polarizability; alpha0: regularized 1/alpha0 = 1/alpha +
  /// Lambda_L; gamma: 1/Lambda_T. Requires all positive and alpha0 <= alpha.
  static DipoleSpec from(double alpha, double alpha0, double gamma);
  /// Same, with Gamma chosen so that hbar omega0 equals the given energy.
  static DipoleSpec from_resonance(double alpha, double alpha0,
                                   double hbar_omega0_eV);

  double alpha() const { return alpha_; }
  double alpha0() const { return alpha0_; }
  double gamma() const { return gamma_; }
  /// Resonant wavenumber, kappa0^2 = 4 pi Gamma / alpha0.
  double kappa0() const { return kappa0_; }
  /// c0 kappa0 in rad/s.
  double omega0() const;
  /// Radiative width of the Lorentzian in wavenumber, (2/3) Gamma kappa0^2.
  double linewidth() const { return 2.0 / 3.0 * gamma_ * kappa0_ * kappa0_; }

 private:
  double alpha_ = 0.0;
  double alpha0_ = 0.0;
  double gamma_ = 0.0;
  double kappa0_ = 0.0;
};

/// t0 = -4 pi Gamma kappa^2 / (kappa0^2 - kappa^2 - (2/3) i Gamma kappa0^2 kappa)
/// with kappa = omega / c0. Requires omega > 0.
std::complex<double> t0(const DipoleSpec& spec, double omega);

/// T = t0 1 + (t0 / kappa) [beta k + k beta - 2 (k.beta) 1] for k = k' is the
/// general expression -i phi_k chi^T + i chi phi_k' with
/// chi_ij = (1 - eps) epsilon_ijk beta_k, after dividing out (1 - eps).
/// k and kp are wave vectors in 1/m, v in m/s. Requires |v|/c0 < 0.01.
CMat3 t_matrix(const DipoleSpec& spec, double omega, const Vec3& k,
               const Vec3& kp, const Vec3& v);

/// Radiative momentum per unit angular frequency (kg m / s per rad/s):
/// (2 hbar / pi) Im(t0 / (alpha kappa^2)) v / c0^2.
Vec3 p_rad_spectral(const DipoleSpec& spec, double omega, const Vec3& v);

/// int_0^inf Im(t0 / kappa^2) dkappa (units of m) with its quadrature error.
struct SpectralIntegral {
  double numeric = 0.0;
  double error = 0.0;
  /// -(pi/2) alpha0 kappa0, exact in the narrow-line limit.
  double narrow_line = 0.0;
  /// Exact value of the Lorentzian integral at finite width.
  double exact = 0.0;
};
SpectralIntegral t0_frequency_integral(const DipoleSpec& spec);

struct RadiativeMomentum {
  Vec3 numeric{};
  Vec3 closed_form{};  // -(alpha0/alpha) (hbar omega0 / c0^2) v
  double quadrature_error = 0.0;
  /// |numeric - closed_form| / |closed_form|, zero when v = 0.
  double rel_deviation = 0.0;
};

/// Integrates p_rad_spectral over (0, inf) with omega = omega0 tan(theta).
/// Throws Error(convergence) when the quadrature misses 1e-10 relative.
RadiativeMomentum p_rad_total(const DipoleSpec& spec, const Vec3& v);

/// -(alpha0/alpha) hbar omega0 / c0^2 in kg; negative means lighter.
double mass_shift(const DipoleSpec& spec);

}  // namespace zpm
