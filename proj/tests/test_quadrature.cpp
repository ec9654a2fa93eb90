#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "zpm/quadrature.hpp"

using namespace zpm;

TEST_CASE("adaptive Gauss-Kronrod") {
  const std::vector<double> b{0.0, 1.0};
  auto r = integrate_piecewise([](double x) { return std::exp(x); }, b);
  CHECK(r.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));

  const std::vector<double> inf{0.0, 1.0, std::numeric_limits<double>::infinity()};
  r = integrate_piecewise([](double x) { return 1.0 / (1.0 + x * x); }, inf);
  CHECK(r.value == doctest::Approx(M_PI / 2).epsilon(1e-12));

  // a narrow peak found by bisection
  const std::vector<double> c{-1.0, 1.0};
  r = integrate_piecewise([](double x) { return 1e-4 / (x * x + 1e-8); }, c, 1e-12);
  CHECK(r.value == doctest::Approx(2.0 * std::atan(1e4)).epsilon(1e-10));
}

TEST_CASE("panel rule integrates polynomials exactly") {
  const PanelRule rule = make_panel_rule(3.0, 0.4);
  double k = 0.0, g = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    k += rule.kronrod_weights[i] * x * x * x * x * x;
    g += rule.gauss_weights[i] * x * x * x * x * x;
  }
  CHECK(k == doctest::Approx(std::pow(3.0, 6) / 6.0).epsilon(1e-13));
  CHECK(g == doctest::Approx(std::pow(3.0, 6) / 6.0).epsilon(1e-13));
}

TEST_CASE("Neville extrapolation") {
  const std::vector<double> eps{0.4, 0.2, 0.1};
  std::vector<double> v;
  for (double e : eps) v.push_back(3.0 - 2.0 * e + 5.0 * e * e);
  const auto r = extrapolate_to_zero<double>(eps, v);
  CHECK(r.value == doctest::Approx(3.0).epsilon(1e-13));

  const std::vector<double> one{0.1};
  const std::vector<double> vone{1.0};
  CHECK_THROWS_AS(extrapolate_to_zero<double>(one, vone), Error);
  const std::vector<double> rep{0.1, 0.1};
  const std::vector<double> vrep{1.0, 2.0};
  CHECK_THROWS_AS(extrapolate_to_zero<double>(rep, vrep), Error);
}
