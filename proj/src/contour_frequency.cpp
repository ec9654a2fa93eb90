#include "zpm/contour_frequency.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "zpm/error.hpp"
#include "zpm/quadrature.hpp"

namespace zpm {

namespace {

using namespace std::complex_literals;

void require_positive(double k, double kp) {
  if (!(k > 0.0) || !(kp > 0.0) || !std::isfinite(k) || !std::isfinite(kp))
    fail(ErrorKind::domain, "frequency integrals need k, k' > 0");
}

}  // namespace

std::string_view to_string(FreqKind kind) {
  return kind == FreqKind::transverse ? "transverse" : "one_longitudinal";
}

FreqKind freq_kind_from_string(std::string_view name) {
  if (name == "transverse") return FreqKind::transverse;
  if (name == "one_longitudinal" || name == "one-longitudinal")
    return FreqKind::one_longitudinal;
  fail(ErrorKind::invalid_input, "unknown frequency integral '" + std::string(name) + "'");
}

std::complex<double> freq_integral_transverse(double k, double kp) {
  require_positive(k, kp);
  const double s = k + kp;
  return -0.25i * M_PI * (k + 2.0 * kp) / (s * s);
}

std::complex<double> freq_integral_one_longitudinal(double k, double kp) {
  require_positive(k, kp);
  const double s = k + kp;
  return 0.25i * M_PI / (k * s * s);
}

std::complex<double> freq_closed_form(FreqKind kind, double k, double kp) {
  return kind == FreqKind::transverse ? freq_integral_transverse(k, kp)
                                      : freq_integral_one_longitudinal(k, kp);
}

RegulatedFreqIntegral freq_regulated(FreqKind kind, double k, double kp,
                                     double eps) {
  require_positive(k, kp);
  if (!(eps > 0.0)) fail(ErrorKind::invalid_input, "regulator must be > 0");
  const int numerator_power = kind == FreqKind::transverse ? 4 : 2;

  // Near a pole the integrand is evaluated in the offset x = w - centre so
  // that w - k stays exact; otherwise rounding of the node positions alone
  // limits the result to ~1e-6 for a triple pole.
  auto integrand_about = [=](double centre) {
    const double ck_minus = centre - k;
    const double ck_plus = centre + k;
    const double ckp_minus = centre - kp;
    const double ckp_plus = centre + kp;
    return [=](double x) -> std::complex<double> {
      const double w = centre + x;
      const std::complex<double> dk((ck_minus + x) * (ck_plus + x), eps);
      const std::complex<double> dkp((ckp_minus + x) * (ckp_plus + x), eps);
      return std::pow(w, numerator_power) / (dk * dk * dkp);
    };
  };

  constexpr double kLevels[] = {0.0, 1.0, 10.0, 100.0, 1000.0};
  struct Window {
    double centre, lo, hi;
  };
  std::vector<Window> windows;
  for (double pole : {k, kp}) {
    if (!windows.empty() && windows.front().centre == pole) continue;
    const double width = eps / (2.0 * pole);
    const double reach = std::min(1000.0 * width, 0.25 * std::min(k, kp));
    windows.push_back({pole, pole - reach, pole + reach});
  }
  std::sort(windows.begin(), windows.end(),
            [](const Window& a, const Window& b) { return a.centre < b.centre; });
  if (windows.size() == 2 && windows[0].hi > windows[1].lo) {
    const double split = 0.5 * (windows[0].centre + windows[1].centre);
    windows[0].hi = split;
    windows[1].lo = split;
  }

  Estimate<std::complex<double>> total;
  auto add = [&](const Estimate<std::complex<double>>& e) {
    total.value += e.value;
    total.error += e.error;
  };
  const double far = 10.0 * std::max(k, kp);
  double cursor = 0.0;
  for (const auto& win : windows) {
    // Plain stretch up to the window, in absolute coordinates.
    if (win.lo > cursor) {
      const double b[] = {cursor, win.lo};
      add(integrate_piecewise(integrand_about(0.0), b, 1e-13));
    }
    const double width = eps / (2.0 * win.centre);
    std::vector<double> offsets;
    for (double n : kLevels) {
      const double d = n * width;
      if (d < win.centre - win.lo) offsets.push_back(-d);
      if (d < win.hi - win.centre) offsets.push_back(d);
    }
    offsets.push_back(win.lo - win.centre);
    offsets.push_back(win.hi - win.centre);
    std::sort(offsets.begin(), offsets.end());
    offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
    add(integrate_piecewise(integrand_about(win.centre), offsets, 1e-13));
    cursor = win.hi;
  }
  const double tail[] = {cursor, far, std::numeric_limits<double>::infinity()};
  add(integrate_piecewise(integrand_about(0.0), tail, 1e-13));
  return {total.value, total.error};
}

FreqIntegralResult freq_oracle(FreqKind kind, double k, double kp,
                               double epsilon) {
  if (!(epsilon >= 1e-6 && epsilon <= 1e-2))
    fail(ErrorKind::invalid_input, "oracle epsilon must lie in [1e-6, 1e-2]");
  FreqIntegralResult r;
  r.kind = kind;
  r.k = k;
  r.kp = kp;
  r.closed_form = freq_closed_form(kind, k, kp);
  r.regulator_epsilon = epsilon;
  // The regulator is dimensionless: it is applied as eps * min(k, k')^2 so
  // the extrapolation behaves identically at every scale.
  const double scale = std::min(k, kp) * std::min(k, kp);
  r.regulator_schedule = {epsilon, epsilon / 2.0, epsilon / 4.0};

  std::array<std::complex<double>, 3> values;
  double quad_error = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto reg =
        freq_regulated(kind, k, kp, r.regulator_schedule[i] * scale);
    values[i] = reg.value;
    quad_error = std::max(quad_error, reg.quadrature_error);
  }
  const auto ex = extrapolate_to_zero<std::complex<double>>(
      r.regulator_schedule, values);
  r.numeric = ex.value;
  r.error_estimate = (ex.residual + quad_error) / std::abs(ex.value);
  r.rel_error = std::abs(r.closed_form - r.numeric) / std::abs(r.closed_form);
  if (!(r.error_estimate <= kFreqConvergenceLimit))
    fail(ErrorKind::convergence,
         "frequency oracle did not converge: relative error estimate " +
             std::to_string(r.error_estimate));
  return r;
}

}  // namespace zpm
