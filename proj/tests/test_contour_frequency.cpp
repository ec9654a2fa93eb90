#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zpm/contour_frequency.hpp"
#include "zpm/error.hpp"

using namespace zpm;
using cd = std::complex<double>;

namespace {
double rel(cd a, cd b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("closed forms at hand-substituted points") {
  CHECK(rel(freq_integral_transverse(1, 1), cd(0, -3 * M_PI / 16)) < 1e-15);
  CHECK(rel(freq_integral_transverse(2, 1), cd(0, -M_PI / 4 * 4.0 / 9.0)) < 1e-15);
  CHECK(rel(freq_integral_one_longitudinal(1, 1), cd(0, M_PI / 16)) < 1e-15);
  CHECK(freq_integral_transverse(0.3, 7).real() == 0.0);
  CHECK(freq_integral_one_longitudinal(0.3, 7).real() == 0.0);
  CHECK(std::abs(freq_integral_one_longitudinal(1, 1e12)) < 1e-20);
  for (double lambda : {0.5, 3.0}) {
    CHECK(rel(freq_integral_transverse(lambda * 1.3, lambda * 0.4),
              freq_integral_transverse(1.3, 0.4) / lambda) < 1e-14);
    CHECK(rel(freq_integral_one_longitudinal(lambda * 1.3, lambda * 0.4),
              freq_integral_one_longitudinal(1.3, 0.4) / (lambda * lambda * lambda)) < 1e-14);
  }
}

TEST_CASE("domain errors") {
  try {
    freq_integral_transverse(0.0, 1.0);
    FAIL("expected domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::domain);
  }
  CHECK_THROWS_AS(freq_integral_one_longitudinal(1.0, -2.0), Error);
  CHECK_THROWS_AS(freq_oracle(FreqKind::transverse, 1, 1, 1e-1), Error);
  CHECK_THROWS_AS(freq_oracle(FreqKind::transverse, 1, 1, 1e-7), Error);
}

TEST_CASE("closed forms agree with the imaginary-axis rotation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(std::log(0.1), std::log(10.0));
  for (int i = 0; i < 20; ++i) {
    const double k = std::exp(u(rng));
    const double kp = std::exp(u(rng));
    CHECK(rel(freq_integral_transverse(k, kp), oracle::wick_transverse(k, kp)) < 1e-12);
    CHECK(rel(freq_integral_one_longitudinal(k, kp), oracle::wick_one_longitudinal(k, kp)) < 1e-12);
  }
}

TEST_CASE("real-axis regulated quadrature reproduces the closed forms") {
  SUBCASE("spec points") {
    const auto a = freq_oracle(FreqKind::transverse, 1, 1);
    CHECK(rel(a.numeric, cd(0, -3 * M_PI / 16)) < 1e-6);
    CHECK(a.regulator_schedule.size() == 3);
    const auto b = freq_oracle(FreqKind::one_longitudinal, 1, 1);
    CHECK(rel(b.numeric, cd(0, M_PI / 16)) < 1e-6);
    const auto c = freq_oracle(FreqKind::transverse, 5, 0.5);
    CHECK(c.rel_error < 1e-6);
  }
  SUBCASE("20 log-uniform pairs") {
    std::mt19937_64 rng(20);
    std::uniform_real_distribution<double> u(std::log(0.1), std::log(10.0));
    for (int i = 0; i < 20; ++i) {
      const double k = std::exp(u(rng));
      const double kp = std::exp(u(rng));
      for (FreqKind kind : {FreqKind::transverse, FreqKind::one_longitudinal}) {
        const auto r = freq_oracle(kind, k, kp);
        CAPTURE(k);
        CAPTURE(kp);
        CHECK(r.rel_error < 1e-5);
        CHECK(r.error_estimate <= 1e-5);
      }
    }
  }
}
