#include <doctest.h>

#include <cmath>

#include "argbound/envelope.hpp"
#include "argbound/zeta.hpp"

using namespace argbound;

namespace {

// K_m recomputed in long double from its defining sums
long double k_reference(int m) {
  const long double e = std::exp(1.0L);
  const long double q = (1.0L / e) * (1.0L + 1.0L / e);
  const long double inv = 1.0L / (1.0L - q);
  long double a = 0.0L, fall = 1.0L, fact = 1.0L;
  for (int j = 0; j <= m; ++j) {
    if (j > 0) fall *= m - j + 1;
    a += fall * (1.0L / e + 1.0L / (std::pow(2.0L, j + 1) * e * e));
  }
  for (int k = 2; k <= m; ++k) fact *= k;
  const long double pi = 3.141592653589793238462643383279502884L;
  const long double j3 = m % 2 == 1 ? inv / (m * (m + 1.0L)) : pi / 2 * inv;
  return (a * inv + q * inv / (m + 1) + j3) / (2 * pi * fact);
}

}  // namespace

TEST_CASE("envelope constants") {
  const EnvelopeConstants c1 = theorem_constant(1);
  CHECK(c1.k_total >= 0.505);
  CHECK(c1.k_total <= 0.515);
  CHECK(c1.k_total == doctest::Approx(0.509).epsilon(1e-3));
  CHECK(theorem_constant(2).k_total == doctest::Approx(0.600).epsilon(1e-3));
  for (int m = 1; m <= 8; ++m) {
    CHECK(std::abs(theorem_constant(m).k_total - static_cast<double>(k_reference(m))) < 1e-14);
  }
  CHECK_THROWS_AS(theorem_constant(0), Error);
}

TEST_CASE("envelope bound") {
  const double t = 1000.0;
  const double expect = theorem_constant(1).k_total * std::log(t) / std::pow(std::log(std::log(t)), 2);
  CHECK(envelope_bound(1, t) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(envelope_bound(1, t) / theorem_constant(1).k_total == doctest::Approx(6.9078 / (1.9326 * 1.9326)).epsilon(1e-4));
  CHECK_THROWS_AS(envelope_bound(1, std::exp(std::exp(1.0))), Error);
  CHECK_NOTHROW(envelope_bound(3, 16.0));
}

TEST_CASE("g kernel limits and decay") {
  CHECK(std::abs(g_kernel(1, 1e-8) - 2.0 / 3.0) < 1e-9);
  CHECK(std::abs(g_kernel(3, 1e-8) - 2.0 / 15.0) < 1e-9);
  CHECK(std::abs(g_kernel(5, 1e-8) - 2.0 / 35.0) < 1e-9);
  CHECK(g_kernel(1, 1e3) < 2e-3);
  CHECK(g_kernel(1, 1e6) < 2e-6);
  CHECK(g_kernel(1, 1e6) > 0.0);
  CHECK_THROWS_AS(g_kernel(2, 0.5), Error);
  CHECK_THROWS_AS(g_kernel(1, 0.0), Error);
  const KernelParams kp{3, 0.2, 0.4};
  CHECK(g_kernel(kp) == g_kernel(3, 0.5));
}

TEST_CASE("g kernel branches meet at the switch") {
  for (int m : {1, 3, 5}) {
    for (double y : {kGSwitch / 2, kGSwitch, 2 * kGSwitch}) {
      CHECK(std::abs(g_kernel_series(m, y) - g_kernel_closed(m, y)) < 1e-9);
    }
  }
}

TEST_CASE("g kernel against the quadrature twin") {
  // g(Delta/B) = K/Delta^{m+2} + 1/(m(m+1)) with K integrated directly
  for (int m : {1, 3}) {
    for (double b : {1e-3, 0.1, 3.0}) {
      const KernelParams kp{m, 1.0, b};
      const double g = k_gamma_quadrature(kp) + 1.0 / (m * (m + 1.0));
      CHECK(std::abs(g_kernel(m, 1.0 / b) - g) < 1e-10);
    }
  }
}

TEST_CASE("kernel closed form against quadrature") {
  CHECK(std::abs(k_gamma_closed({1, 0.3, 0.2}) - k_gamma_quadrature({1, 0.3, 0.2})) < 1e-10);
  CHECK(std::abs(k_gamma_closed({3, 0.1, 1.0}) - k_gamma_quadrature({3, 0.1, 1.0})) < 1e-12);
  for (int m : {1, 3, 5}) {
    const double at_zero = -std::pow(0.5, m + 2) / (m * (m + 1.0));
    CHECK(k_gamma_closed({m, 0.5, 0.0}) == doctest::Approx(at_zero).epsilon(1e-14));
    CHECK(std::abs(k_gamma_quadrature({m, 0.5, 0.0}) - at_zero) < 1e-12);
  }
  CHECK_THROWS_AS(k_gamma_closed({2, 0.5, 0.1}), Error);
  CHECK_NOTHROW(k_gamma_quadrature({2, 0.5, 0.1}));
  CHECK_THROWS_AS(k_gamma_quadrature({1, 0.0, 0.1}), Error);
}

TEST_CASE("exponential moment integration by parts") {
  CHECK(partial_integration_identity(1, 10.0).discrepancy < 1e-10);
  CHECK(partial_integration_identity(4, 100.0).discrepancy < 1e-10);
  for (int m = 1; m <= 4; ++m) {
    for (double x : {4.0, 10.0, 100.0}) CHECK(partial_integration_identity(m, x).discrepancy < 1e-10);
  }
  CHECK_THROWS_AS(partial_integration_identity(1, 3.0), Error);
}
