#include "zpm/special_functions.hpp"

#include <cmath>
#include <string>

#include "zpm/error.hpp"

namespace zpm {

namespace {

constexpr double kSeriesCrossover = 1e-2;
// The closed form of j2 loses ~log10(45/x^4) digits; the series stays exact to
// ~1e-15 out to x = 0.5, so j2 switches later.
constexpr double kSeriesCrossoverJ2 = 0.5;

// j_n(x) = x^n sum_k (-x^2/2)^k / (k! (2n+2k+1)!!), first six terms.
double bessel_series(int n, double x) {
  double double_factorial = 1.0;  // (2n+1)!!
  for (int m = 3; m <= 2 * n + 1; m += 2) double_factorial *= m;
  const double x2 = 0.5 * x * x;
  double term = 1.0 / double_factorial;
  double sum = term;
  for (int k = 1; k < 6; ++k) {
    term *= -x2 / (k * (2.0 * n + 2.0 * k + 1.0));
    sum += term;
  }
  return std::pow(x, n) * sum;
}

}  // namespace

double sph_bessel_j(int n, double x) {
  if (n < 0 || n > 2)
    fail(ErrorKind::invalid_input,
         "sph_bessel_j: order " + std::to_string(n) + " not in {0,1,2}");
  const double crossover = n == 2 ? kSeriesCrossoverJ2 : kSeriesCrossover;
  if (std::fabs(x) < crossover) return bessel_series(n, x);
  const double s = std::sin(x);
  const double c = std::cos(x);
  switch (n) {
    case 0:
      return s / x;
    case 1:
      return (s / x - c) / x;
    default:
      return ((3.0 / (x * x) - 1.0) * s - 3.0 * c / x) / x;
  }
}

double sphere_form_factor(FormFactorArgs args) {
  if (!(args.q >= 0.0) || !(args.a > 0.0))
    fail(ErrorKind::invalid_input, "sphere_form_factor: need q >= 0, a > 0");
  const double x = args.q * args.a;
  const double a3 = args.a * args.a * args.a;
  if (x == 0.0) return 4.0 * M_PI * a3 / 3.0;
  // 4 pi (sin x - x cos x) / q^3 = 4 pi a^3 j1(x) / x
  if (x < kSeriesCrossover) return 4.0 * M_PI * a3 * sph_bessel_j(1, x) / x;
  return 4.0 * M_PI * (std::sin(x) - x * std::cos(x)) /
         (args.q * args.q * args.q);
}

}  // namespace zpm
