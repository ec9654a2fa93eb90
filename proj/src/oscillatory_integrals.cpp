#include "zpm/oscillatory_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "zpm/error.hpp"
#include "zpm/quadrature.hpp"
#include "zpm/special_functions.hpp"

namespace zpm {

namespace {

struct NameEntry {
  ConstantName name;
  std::string_view text;
};

constexpr NameEntry kNames[] = {
    {ConstantName::I0, "I0"}, {ConstantName::I1, "I1"}, {ConstantName::A, "A"},
    {ConstantName::C, "C"},   {ConstantName::D, "D"},   {ConstantName::E, "E"},
    {ConstantName::E1, "E1"}, {ConstantName::E2, "E2"}, {ConstantName::E3, "E3"},
};

double trig_integrand(ConstantName name, double x) {
  using std::cos;
  using std::sin;
  const double s = sin(x);
  const double c = cos(x);
  switch (name) {
    case ConstantName::I0:
      return -12.0 * cos(5 * x) * c * s * s * s * s;
    case ConstantName::I1:
      return -6.0 * s * s * c * (3 * sin(2 * x) * sin(5 * x) + 2 * cos(3 * x));
    case ConstantName::A:
      return 4.0 * s * s * c * cos(2 * x) *
             (2 * cos(3 * x) + 3 * sin(2 * x) * sin(5 * x));
    case ConstantName::C:
      return 24.0 * s * s * s * s * c * cos(5 * x) * cos(2 * x);
    case ConstantName::E1:
      return -24.0 * s * s * c * (1.5 * sin(2 * x) * sin(5 * x) + cos(3 * x));
    case ConstantName::E2:
      return -4.0 * c * c *
             (3 + 1.5 * sin(2 * x) * sin(4 * x) + 3 * s * sin(3 * x) +
              c * cos(3 * x));
    case ConstantName::E3: {
      const double s2 = sin(2 * x);
      return 6.0 * c *
             (6 * c - 2 * cos(2 * x) * cos(3 * x) - s2 * s2 * cos(5 * x));
    }
    default:
      fail(ErrorKind::invalid_input,
           "no trigonometric reduction for " + std::string(to_string(name)));
  }
}

void validate_schedule(std::span<const double> schedule) {
  if (schedule.size() < 2)
    fail(ErrorKind::invalid_input,
         "regulator schedule needs at least two values to extrapolate");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0 && schedule[i] <= 0.2))
      fail(ErrorKind::invalid_input, "regulator values must lie in (0, 0.2]");
    if (i > 0 && !(schedule[i] < schedule[i - 1]))
      fail(ErrorKind::invalid_input, "regulator schedule must be descending");
  }
}

// Radial factor x^power j_order(x) e^{-eps x} times a quadrature weight.
struct Factor {
  int power;
  int order;
  bool operator==(const Factor&) const = default;
};

std::vector<double> weighted_factor(const PanelRule& rule,
                                    const std::vector<double>& weights,
                                    Factor f, double eps) {
  std::vector<double> out(rule.nodes.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = rule.nodes[i];
    out[i] = weights[i] * std::pow(x, f.power) * sph_bessel_j(f.order, x) *
             std::exp(-eps * x);
  }
  return out;
}

RegulatedValue tensor_sum(const KernelSpec& kernel, double eps,
                          const PanelRule& rule) {
  std::vector<Factor> q_factors;
  std::vector<Factor> p_factors;
  std::vector<std::size_t> term_q;
  std::vector<std::size_t> term_p;
  auto index_of = [](std::vector<Factor>& list, Factor f) {
    auto it = std::find(list.begin(), list.end(), f);
    if (it != list.end()) return static_cast<std::size_t>(it - list.begin());
    list.push_back(f);
    return list.size() - 1;
  };
  for (const auto& t : kernel.terms) {
    term_p.push_back(index_of(p_factors, {t.p_power, t.p_order}));
    term_q.push_back(index_of(q_factors, {t.q_power, t.q_order}));
  }

  // The (p, q) grid is symmetric, so p and q share one rule.
  std::vector<std::vector<double>> qk, qg, pk, pg, pabs;
  for (const auto& f : q_factors) {
    qk.push_back(weighted_factor(rule, rule.kronrod_weights, f, eps));
    qg.push_back(weighted_factor(rule, rule.gauss_weights, f, eps));
  }
  for (const auto& f : p_factors) {
    pk.push_back(weighted_factor(rule, rule.kronrod_weights, f, eps));
    pg.push_back(weighted_factor(rule, rule.gauss_weights, f, eps));
  }

  const std::size_t n = rule.nodes.size();
  const double* q = rule.nodes.data();
  const int d = kernel.denominator_power;
  std::vector<double> h(n);
  std::vector<double> sk(q_factors.size());
  std::vector<double> sg(q_factors.size());
  std::vector<double> sabs(q_factors.size());
  double total_k = 0.0;
  double total_g = 0.0;
  double l1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = rule.nodes[i];
    double* hp = h.data();
    if (d == 2) {
#pragma omp simd
      for (std::size_t j = 0; j < n; ++j) {
        const double inv = 1.0 / (p + q[j]);
        hp[j] = inv * inv;
      }
    } else if (d == 1) {
#pragma omp simd
      for (std::size_t j = 0; j < n; ++j) hp[j] = 1.0 / (p + q[j]);
    } else {
      for (std::size_t j = 0; j < n; ++j) hp[j] = std::pow(p + q[j], -d);
    }
    for (std::size_t f = 0; f < q_factors.size(); ++f) {
      const double* wk = qk[f].data();
      const double* wg = qg[f].data();
      double acc_k = 0.0;
      double acc_g = 0.0;
      double acc_abs = 0.0;
#pragma omp simd reduction(+ : acc_k, acc_g, acc_abs)
      for (std::size_t j = 0; j < n; ++j) {
        acc_k += wk[j] * hp[j];
        acc_g += wg[j] * hp[j];
        acc_abs += std::fabs(wk[j]) * hp[j];
      }
      sk[f] = acc_k;
      sg[f] = acc_g;
      sabs[f] = acc_abs;
    }
    for (std::size_t t = 0; t < kernel.terms.size(); ++t) {
      const double c = kernel.terms[t].coefficient;
      total_k += c * pk[term_p[t]][i] * sk[term_q[t]];
      total_g += c * pg[term_p[t]][i] * sg[term_q[t]];
      l1 += std::fabs(c * pk[term_p[t]][i]) * sabs[term_q[t]];
    }
  }
  return {total_k, std::fabs(total_k - total_g), l1};
}

}  // namespace

std::string_view to_string(ConstantName name) {
  for (const auto& e : kNames)
    if (e.name == name) return e.text;
  return "?";
}

ConstantName constant_from_string(std::string_view text) {
  for (const auto& e : kNames)
    if (e.text == text) return e.name;
  fail(ErrorKind::invalid_input, "unknown constant '" + std::string(text) + "'");
}

std::string_view to_string(Method method) {
  return method == Method::trig_reduction ? "trig_reduction"
                                          : "regulated_quadrature";
}

KernelSpec KernelSpec::scaled(double factor) const {
  KernelSpec out = *this;
  for (auto& t : out.terms) t.coefficient *= factor;
  return out;
}

KernelSpec kernel_spec(ConstantName name) {
  switch (name) {
    // p^4 q^2 (p + 2q) / (p+q)^2 j0(p) j0(q)
    case ConstantName::I0:
      return {"I0", {{1, 5, 0, 2, 0}, {2, 4, 0, 3, 0}}, 2, KernelExtra::none};
    // p^3 q^3 (p + 2q) / (p+q)^2 j1(p) j1(q)
    case ConstantName::I1:
      return {"I1", {{1, 4, 1, 3, 1}, {2, 3, 1, 4, 1}}, 2, KernelExtra::none};
    case ConstantName::A:
      return {"A", {{1, 4, 1, 3, 1}}, 2, KernelExtra::none};
    case ConstantName::C:
      return {"C", {{1, 5, 0, 2, 0}}, 2, KernelExtra::none};
    case ConstantName::D:
      return {"D", {{1, 3, 0, 4, 0}}, 2, KernelExtra::none};
    // p^3 q^3 / (p+q) [3 a(p) a(q) - a(p) b(q) - b(p) a(q) + b(p) b(q)]
    // with a = j1(x)/x, b = j2(x).
    case ConstantName::E:
      return {"E",
              {{3, 2, 1, 2, 1}, {-1, 2, 1, 3, 2}, {-1, 3, 2, 2, 1}, {1, 3, 2, 3, 2}},
              1,
              KernelExtra::phase_3d};
    default:
      fail(ErrorKind::invalid_input,
           "no defining double integral for " + std::string(to_string(name)));
  }
}

RegulatedValue regulated_kernel_value(const KernelSpec& kernel, double eps,
                                      const BruteForceOptions& options) {
  if (!(eps > 0.0)) fail(ErrorKind::invalid_input, "regulator must be > 0");
  if (kernel.terms.empty())
    fail(ErrorKind::invalid_input, "kernel has no terms");
  const double upper = options.cutoff_factor / eps;
  double panel = options.max_panel;
  RegulatedValue result;
  for (int level = 0; level <= options.max_refinements; ++level) {
    result = tensor_sum(kernel, eps, make_panel_rule(upper, panel));
    if (result.quadrature_error <= options.quadrature_rel_tol * result.l1_norm)
      break;
    panel *= 0.5;
  }
  return result;
}

IntegralResult eval_kernel(const KernelSpec& kernel,
                           std::span<const double> schedule,
                           const BruteForceOptions& options) {
  validate_schedule(schedule);
  IntegralResult r;
  r.name = kernel.name;
  r.method = Method::regulated_quadrature;
  r.regulator_schedule.assign(schedule.begin(), schedule.end());
  double quad_error = 0.0;
  for (double eps : schedule) {
    const auto v = regulated_kernel_value(kernel, eps, options);
    r.regulated_values.push_back(v.value);
    quad_error = std::max(quad_error, v.quadrature_error);
  }
  const auto ex = extrapolate_to_zero<double>(r.regulator_schedule,
                                              r.regulated_values);
  r.value = ex.value;
  r.error_estimate = ex.residual + quad_error;
  if (ex.residual > kDivergenceResidual * std::fabs(ex.value))
    fail(ErrorKind::convergence,
         "divergence suspected for " + kernel.name + ": extrapolation residual " +
             std::to_string(ex.residual) + " vs value " + std::to_string(ex.value));
  return r;
}

IntegralResult eval_trig(ConstantName name) {
  IntegralResult r;
  r.name = std::string(to_string(name));
  r.method = Method::trig_reduction;
  if (name == ConstantName::E) {
    for (auto part : {ConstantName::E1, ConstantName::E2, ConstantName::E3}) {
      const auto sub = eval_trig(part);
      r.value += sub.value;
      r.error_estimate += sub.error_estimate;
    }
    return r;
  }
  auto f = [name](double x) { return trig_integrand(name, x); };
  (void)trig_integrand(name, 0.0);  // rejects names without a reduction
  const double breaks[] = {0.0, M_PI / 4, M_PI / 2};
  const auto est = integrate_piecewise(f, breaks, 1e-14, 1e-15);
  r.value = est.value;
  r.error_estimate = est.error;
  return r;
}

IntegralResult eval_bruteforce(ConstantName name,
                               std::span<const double> schedule,
                               const BruteForceOptions& options) {
  return eval_kernel(kernel_spec(name), schedule, options);
}

IntegralResult eval_E_bruteforce(std::span<const double> schedule,
                                 const BruteForceOptions& options) {
  return eval_kernel(kernel_spec(ConstantName::E), schedule, options);
}

D1D3 solve_D1_D3(double D, double E) {
  return {(3.0 * E - D) / 30.0, (2.0 * D - E) / 15.0};
}

}  // namespace zpm
