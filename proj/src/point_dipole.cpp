#include "zpm/point_dipole.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zpm/error.hpp"
#include "zpm/quadrature.hpp"
#include "zpm/units.hpp"

namespace zpm {

namespace {

using PC = PhysicalConstants;

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x))
    fail(ErrorKind::invalid_input, std::string(what) + " must be positive and finite");
}

// Im(t0 / kappa^2) as a function of kappa.
double im_t0_over_kappa2(const DipoleSpec& s, double kappa) {
  const double k02 = s.kappa0() * s.kappa0();
  const double g = s.linewidth();
  const double re = k02 - kappa * kappa;
  const double im = g * kappa;
  return -4.0 * M_PI * s.gamma() * im / (re * re + im * im);
}

}  // namespace

DipoleSpec DipoleSpec::from(double alpha, double alpha0, double gamma) {
  require_positive(alpha, "alpha");
  require_positive(alpha0, "alpha0");
  require_positive(gamma, "gamma");
  if (alpha0 > alpha)
    fail(ErrorKind::domain, "alpha0 must not exceed alpha (Lambda_L >= 0)");
  DipoleSpec s;
  s.alpha_ = alpha;
  s.alpha0_ = alpha0;
  s.gamma_ = gamma;
  s.kappa0_ = std::sqrt(4.0 * M_PI * gamma / alpha0);
  return s;
}

DipoleSpec DipoleSpec::from_resonance(double alpha, double alpha0,
                                      double hbar_omega0_eV) {
  require_positive(hbar_omega0_eV, "hbar omega0");
  require_positive(alpha0, "alpha0");
  const double kappa0 = hbar_omega0_eV * PC::eV_si / (PC::hbar_si * PC::c0_si);
  return from(alpha, alpha0, kappa0 * kappa0 * alpha0 / (4.0 * M_PI));
}

double DipoleSpec::omega0() const { return PC::c0_si * kappa0_; }

std::complex<double> t0(const DipoleSpec& spec, double omega) {
  require_positive(omega, "omega");
  const double kappa = omega / PC::c0_si;
  const double k02 = spec.kappa0() * spec.kappa0();
  const std::complex<double> den(k02 - kappa * kappa, -spec.linewidth() * kappa);
  return -4.0 * M_PI * spec.gamma() * kappa * kappa / den;
}

CMat3 t_matrix(const DipoleSpec& spec, double omega, const Vec3& k,
               const Vec3& kp, const Vec3& v) {
  const Vec3 beta = (1.0 / PC::c0_si) * v;
  if (norm(beta) >= kMaxBeta)
    fail(ErrorKind::domain, "t_matrix requires |v|/c0 < 0.01");
  const std::complex<double> t = t0(spec, omega);
  const double kappa = omega / PC::c0_si;
  // -i phi_k S^T + i S phi_kp with phi_p = i skew(p) and S = skew(beta).
  const Mat3 S = skew(beta);
  const Mat3 K = skew(k);
  const Mat3 Kp = skew(kp);
  CMat3 T{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double corr = 0.0;
      for (int m = 0; m < 3; ++m) corr += K[i][m] * S[j][m] - S[i][m] * Kp[m][j];
      T[i][j] = (i == j ? t : 0.0) + t / kappa * corr;
    }
  return T;
}

Vec3 p_rad_spectral(const DipoleSpec& spec, double omega, const Vec3& v) {
  require_positive(omega, "omega");
  const double kappa = omega / PC::c0_si;
  const double s = 2.0 * PC::hbar_si / M_PI * im_t0_over_kappa2(spec, kappa) /
                   spec.alpha() / (PC::c0_si * PC::c0_si);
  return s * v;
}

SpectralIntegral t0_frequency_integral(const DipoleSpec& spec) {
  const double k0 = spec.kappa0();
  const double g = spec.linewidth();
  // kappa = kappa0 tan(theta) with theta = pi/4 + phi, so that
  // kappa0^2 - kappa^2 = -4 kappa0^2 u / (1 - u)^2 (u = tan phi) keeps full
  // precision across the line, whose half-width in phi is about g / (4 kappa0).
  const double four_pi_gamma = 4.0 * M_PI * spec.gamma();
  auto f = [&](double phi) {
    if (phi >= M_PI / 4) return 0.0;
    const double u = std::tan(phi);
    const double t = (1.0 + u) / (1.0 - u);
    const double kappa = k0 * t;
    const double re = -4.0 * k0 * k0 * u / ((1.0 - u) * (1.0 - u));
    const double im = g * kappa;
    return -four_pi_gamma * im / (re * re + im * im) * k0 * (1.0 + t * t);
  };
  const double w = g / (4.0 * k0);
  std::vector<double> breaks;
  for (double d = w; d < M_PI / 4; d *= 8.0) {
    breaks.push_back(-d);
    breaks.push_back(d);
  }
  // decades in kappa / kappa0 resolve the two scales of an overdamped line
  for (int j = -8; j <= 8; ++j)
    if (j != 0) breaks.push_back(std::atan(std::pow(10.0, j)) - M_PI / 4);
  breaks.push_back(-M_PI / 4);
  breaks.push_back(0.0);
  breaks.push_back(M_PI / 4);
  std::sort(breaks.begin(), breaks.end());

  const auto est = integrate_piecewise(f, breaks, 1e-12, 0.0, 20000);
  SpectralIntegral r;
  r.numeric = est.value;
  r.error = est.error;
  r.narrow_line = -M_PI / 2 * spec.alpha0() * k0;

  // int_0^inf g kappa / ((k0^2 - kappa^2)^2 + g^2 kappa^2) dkappa with
  // u = kappa^2 becomes (g/2) int du / ((u - b)^2 + c2).
  const double b = k0 * k0 - g * g / 2;
  const double c2 = g * g * k0 * k0 - g * g * g * g / 4;
  double J = 0.0;
  if (c2 > 0.0) {
    const double c = std::sqrt(c2);
    J = g / (2 * c) * (M_PI / 2 + std::atan(b / c));
  } else if (c2 == 0.0) {
    J = g / (2 * -b);
  } else {
    // overdamped: real roots r2 = b - d and r1 = k0^4 / r2 (b + d cancels)
    const double d = std::sqrt(-c2);
    const double r2 = b - d;
    const double r1 = k0 * k0 * k0 * k0 / r2;
    J = g / (4 * d) * std::log(r2 / r1);
  }
  r.exact = -4.0 * M_PI * spec.gamma() * J;
  return r;
}

RadiativeMomentum p_rad_total(const DipoleSpec& spec, const Vec3& v) {
  if (norm(v) / PC::c0_si >= kMaxBeta)
    fail(ErrorKind::domain, "p_rad_total requires |v|/c0 < 0.01");
  const SpectralIntegral J = t0_frequency_integral(spec);
  if (!(J.error <= 1e-10 * std::fabs(J.numeric)))
    fail(ErrorKind::convergence,
         "dipole frequency quadrature did not converge (residual " +
             std::to_string(J.error / std::fabs(J.numeric)) + ")");
  // d omega = c0 d kappa turns the spectral density into (2 hbar / pi) J v / (alpha c0).
  const double scale = 2.0 * PC::hbar_si / M_PI / spec.alpha() / PC::c0_si;
  RadiativeMomentum r;
  r.numeric = (scale * J.numeric) * v;
  r.quadrature_error = scale * J.error * norm(v);
  r.closed_form = mass_shift(spec) * v;
  const double ref = norm(r.closed_form);
  r.rel_deviation = ref > 0.0 ? norm(r.numeric - r.closed_form) / ref : 0.0;
  return r;
}

double mass_shift(const DipoleSpec& spec) {
  return -(spec.alpha0() / spec.alpha()) * PC::hbar_si * spec.omega0() /
         (PC::c0_si * PC::c0_si);
}

}  // namespace zpm
