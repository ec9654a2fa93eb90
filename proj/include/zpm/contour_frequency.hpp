#pragma once

// The two frequency integrals met when the second-order Born term is reduced
// by contour integration, each with a brute-force check on the real axis.
// Units: c0 = 1, so omega, k and k' share one scale.

#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace zpm {

enum class FreqKind {
  transverse,        // int_0^inf w^4 / ((w^2-k^2+ie)^2 (w^2-k'^2+ie)) dw
  one_longitudinal,  // int_0^inf w^2 / ((w^2-k^2+ie)^2 (w^2-k'^2+ie)) dw
};

std::string_view to_string(FreqKind kind);
FreqKind freq_kind_from_string(std::string_view name);

/// -(pi i / 4) (k + 2k') / (k + k')^2
std::complex<double> freq_integral_transverse(double k, double kp);
/// (pi i / 4) / (k (k + k')^2)
std::complex<double> freq_integral_one_longitudinal(double k, double kp);
std::complex<double> freq_closed_form(FreqKind kind, double k, double kp);

/// Literal integrand with both poles shifted by +i eps, integrated over the
/// whole half line. The error is the quadrature estimate.
struct RegulatedFreqIntegral {
  std::complex<double> value;
  double quadrature_error = 0.0;
};
RegulatedFreqIntegral freq_regulated(FreqKind kind, double k, double kp,
                                     double eps);

struct FreqIntegralResult {
  FreqKind kind = FreqKind::transverse;
  double k = 0.0;
  double kp = 0.0;
  std::complex<double> closed_form;
  std::complex<double> numeric;
  std::vector<double> regulator_schedule;
  /// Base regulator (largest value of the schedule).
  double regulator_epsilon = 0.0;
  /// Estimated error of `numeric` relative to its magnitude.
  double error_estimate = 0.0;
  /// |closed_form - numeric| / |closed_form|, recorded, not asserted.
  double rel_error = 0.0;
};

inline constexpr double kDefaultFreqEpsilon = 1e-3;
inline constexpr double kFreqConvergenceLimit = 1e-5;

/// Evaluates the regulated integral at eps, eps/2, eps/4 and extrapolates
/// quadratically to eps -> 0. Throws Error(convergence) when the combined
/// extrapolation and quadrature error exceeds 1e-5 relative.
FreqIntegralResult freq_oracle(FreqKind kind, double k, double kp,
                               double epsilon = kDefaultFreqEpsilon);

}  // namespace zpm
