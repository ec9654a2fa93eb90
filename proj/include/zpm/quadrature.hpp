#pragma once

// Shared numerical machinery: globally adaptive 1-D Gauss-Kronrod on piecewise
// intervals, tensorizable panel rules, and polynomial extrapolation of a
// regulator to zero.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "zpm/error.hpp"

namespace zpm {

template <class T>
struct Estimate {
  T value{};
  double error = 0.0;
};

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(const std::complex<double>& z) { return std::abs(z); }

/// One G7/K15 application on [a, b]: Kronrod value and |K - G| as error.
template <class F>
auto gauss_kronrod_15(F& f, double a, double b) -> Estimate<decltype(f(0.0))> {
  using Result = decltype(f(0.0));
  using boost::math::quadrature::gauss;
  using boost::math::quadrature::gauss_kronrod;
  const auto& kx = gauss_kronrod<double, 15>::abscissa();
  const auto& kw = gauss_kronrod<double, 15>::weights();
  const auto& gw = gauss<double, 7>::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Result centre = f(mid);
  Result k_sum = kw[0] * centre;
  Result g_sum = gw[0] * centre;
  for (std::size_t i = 1; i < kx.size(); ++i) {
    const Result pair = f(mid - half * kx[i]) + f(mid + half * kx[i]);
    k_sum += kw[i] * pair;
    if (i % 2 == 0) g_sum += gw[i / 2] * pair;
  }
  return {half * k_sum, magnitude(half * (k_sum - g_sum))};
}

/// Globally adaptive G7/K15 over consecutive breakpoints: the interval with
/// the largest error is bisected until the summed error drops below
/// max(abs_tol, rel_tol * |value|) or max_intervals is reached. The last
/// breakpoint may be +infinity; that piece is mapped onto [0, 1).
template <class F>
auto integrate_piecewise(F&& f, std::span<const double> breaks,
                         double rel_tol = 1e-12, double abs_tol = 0.0,
                         std::size_t max_intervals = 4000)
    -> Estimate<decltype(f(0.0))> {
  using Result = decltype(f(0.0));
  struct Piece {
    double a, b;
    bool mapped;
    Estimate<Result> est;
  };
  auto eval = [&](double a, double b, bool mapped) {
    if (!mapped) return gauss_kronrod_15(f, a, b);
    const double origin = breaks[breaks.size() - 2];
    auto g = [&](double t) -> Result {
      const double s = 1.0 - t;
      return f(origin + t / s) / (s * s);
    };
    return gauss_kronrod_15(g, a, b);
  };

  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    const bool mapped = std::isinf(breaks[i + 1]);
    const double a = mapped ? 0.0 : breaks[i];
    const double b = mapped ? 1.0 : breaks[i + 1];
    pieces.push_back({a, b, mapped, eval(a, b, mapped)});
  }
  auto totals = [&] {
    Estimate<Result> t;
    for (const auto& p : pieces) {
      t.value += p.est.value;
      t.error += p.est.error;
    }
    return t;
  };
  Estimate<Result> total = totals();
  while (pieces.size() < max_intervals &&
         total.error > std::max(abs_tol, rel_tol * magnitude(total.value))) {
    auto worst = std::max_element(
        pieces.begin(), pieces.end(),
        [](const Piece& x, const Piece& y) { return x.est.error < y.est.error; });
    const Piece p = *worst;
    const double mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a && mid < p.b)) break;  // interval exhausted in double
    *worst = {p.a, mid, p.mapped, eval(p.a, mid, p.mapped)};
    pieces.push_back({mid, p.b, p.mapped, eval(mid, p.b, p.mapped)});
    total = totals();
  }
  return total;
}

/// Composite rule on [0, upper] built from equal panels of width at most
/// max_panel, each carrying the 15 Kronrod nodes. `gauss_weights` is zero on
/// Kronrod-only nodes, so the same node set yields the embedded G7 estimate.
struct PanelRule {
  std::vector<double> nodes;
  std::vector<double> kronrod_weights;
  std::vector<double> gauss_weights;
};

PanelRule make_panel_rule(double upper, double max_panel);

/// Result of extrapolating f(eps) to eps -> 0.
template <class T>
struct Extrapolation {
  T value{};
  /// |P(all points) - P(all but the largest eps)|: the last Neville correction.
  double residual = 0.0;
};

/// Polynomial (Neville) extrapolation of values[i] = f(eps[i]) to eps = 0
/// using every point. Needs at least two distinct eps.
template <class T>
Extrapolation<T> extrapolate_to_zero(std::span<const double> eps,
                                     std::span<const T> values) {
  const std::size_t n = eps.size();
  if (n != values.size())
    fail(ErrorKind::invalid_input, "extrapolation: size mismatch");
  if (n < 2)
    fail(ErrorKind::invalid_input,
         "extrapolation needs at least two regulator values");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (eps[i] == eps[j])
        fail(ErrorKind::invalid_input, "extrapolation: repeated regulator value");

  // p[i] holds the interpolant through points i..i+m evaluated at zero.
  std::vector<T> p(values.begin(), values.end());
  std::vector<T> previous;
  for (std::size_t m = 1; m < n; ++m) {
    previous = p;
    for (std::size_t i = 0; i + m < n; ++i) {
      const double lo = eps[i];
      const double hi = eps[i + m];
      p[i] = (hi * previous[i] - lo * previous[i + 1]) / (hi - lo);
    }
  }
  // previous[1] is the interpolant through points 1..n-1 (largest eps dropped
  // when the schedule is descending).
  return {p[0], magnitude(p[0] - previous[1])};
}

}  // namespace zpm
