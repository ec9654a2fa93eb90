#pragma once

// Dimensionless constants of the second-order Born momentum. Each is
// available two ways: from the one-dimensional trigonometric form obtained by
// rotating the p-integral onto the imaginary axis, and by brute-force
// quadrature of the defining (p, q) double integral with an exp(-eps (p+q))
// regulator extrapolated to eps -> 0.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zpm {

enum class ConstantName { I0, I1, A, C, D, E, E1, E2, E3 };

std::string_view to_string(ConstantName name);
ConstantName constant_from_string(std::string_view name);

enum class Method { trig_reduction, regulated_quadrature };
std::string_view to_string(Method method);

struct IntegralResult {
  std::string name;
  double value = 0.0;
  double error_estimate = 0.0;
  Method method = Method::trig_reduction;
  /// Empty for trig reductions.
  std::vector<double> regulator_schedule;
  /// Regulated value at each schedule point, before extrapolation.
  std::vector<double> regulated_values;
};

/// One separable term c * p^a j_m(p) * q^b j_n(q) of a kernel. All terms of a
/// kernel share the denominator (p + q)^d.
struct KernelTerm {
  double coefficient = 1.0;
  int p_power = 0;
  int p_order = 0;
  int q_power = 0;
  int q_order = 0;
};

enum class KernelExtra {
  none,
  /// The kernel is the radial reduction of a 6-D integral carrying the
  /// phase exp[i (p - q) . r]; the angular parts are already folded in.
  phase_3d,
};

struct KernelSpec {
  std::string name;
  std::vector<KernelTerm> terms;
  int denominator_power = 2;
  KernelExtra extra = KernelExtra::none;

  KernelSpec scaled(double factor) const;
};

/// Defining kernels of I0, I1, A, C, D and the radial form of E.
KernelSpec kernel_spec(ConstantName name);

inline constexpr std::array<double, 3> kDefaultSchedule{0.1, 0.05, 0.025};
/// Extrapolation residual above this fraction of |value| flags divergence.
inline constexpr double kDivergenceResidual = 0.05;

struct BruteForceOptions {
  /// Panel width of the tensorized G7/K15 rule; resolves the Bessel phase.
  double max_panel = 0.7853981633974483;  // pi / 4
  /// Truncation P_max = cutoff_factor / eps, leaving an e^-50 tail.
  double cutoff_factor = 50.0;
  /// Target for |K - G| relative to the L1 norm of the grid sum; the panel
  /// width is halved (up to max_refinements times) until it is met.
  double quadrature_rel_tol = 1e-11;
  int max_refinements = 2;
};

struct RegulatedValue {
  double value = 0.0;
  double quadrature_error = 0.0;
  double l1_norm = 0.0;
};

/// The double integral of `kernel` times exp(-eps (p+q)) on [0, P_max]^2.
RegulatedValue regulated_kernel_value(const KernelSpec& kernel, double eps,
                                      const BruteForceOptions& options = {});

/// Regulated quadrature at every eps of `schedule` (descending, in (0, 0.2],
/// at least two values) followed by polynomial extrapolation to eps = 0.
/// Throws Error(convergence) when the residual exceeds 5% of the value.
IntegralResult eval_kernel(const KernelSpec& kernel,
                           std::span<const double> schedule,
                           const BruteForceOptions& options = {});

/// Trig reduction on [0, pi/2] for I0, I1, A, C, E1, E2, E3.
IntegralResult eval_trig(ConstantName name);

/// Brute-force route for I0, I1, A, C, D (and E, forwarded).
IntegralResult eval_bruteforce(ConstantName name,
                               std::span<const double> schedule = kDefaultSchedule,
                               const BruteForceOptions& options = {});

/// E = (4 pi)^-2 int d^3p d^3q (p.q)^2 / (p q (p + q)) exp[i (p - q) . r].
/// The angular integrals are done with the rank-2 identity
///   int dOmega p_i p_j e^{i p.r} = 4 pi [ j1(p)/p delta_ij - j2(p) r_i r_j ],
/// leaving a regulated radial double integral.
IntegralResult eval_E_bruteforce(std::span<const double> schedule = kDefaultSchedule,
                                 const BruteForceOptions& options = {});

struct D1D3 {
  double d1 = 0.0;
  double d3 = 0.0;
};

/// Unique solution of 6 D1 + 9 D3 = D, 12 D1 + 3 D3 = E.
D1D3 solve_D1_D3(double D, double E);

}  // namespace zpm
