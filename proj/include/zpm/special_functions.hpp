#pragma once

namespace zpm {

/// Spherical Bessel function j_n(x) for n in {0, 1, 2}. Below |x| = 1e-2 a
/// six-term Taylor series replaces the closed form, which cancels badly there.
double sph_bessel_j(int n, double x);

struct FormFactorArgs {
  double q = 0.0;  // |k - k'|
  double a = 1.0;  // sphere radius
};

/// Fourier transform of the indicator function of a ball of radius a:
/// 4 pi (sin qa - qa cos qa) / q^3, equal to the volume 4 pi a^3 / 3 at q = 0.
double sphere_form_factor(FormFactorArgs args);

}  // namespace zpm
