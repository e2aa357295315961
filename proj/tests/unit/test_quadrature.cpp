#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>

#include "argbound/quadrature.hpp"
#include "argbound/zeta.hpp"

using namespace argbound;

TEST_CASE("gk21 integrates smooth functions to round-off") {
  const QuadratureConfig cfg;
  const auto r = integrate_gk21<double>([](double x) { return std::exp(x); }, 0.0, 1.0, cfg);
  CHECK(r.converged);
  CHECK(std::abs(r.value - (std::exp(1.0) - 1.0)) < 1e-14);
  CHECK(r.evaluations == 21);
}

TEST_CASE("endpoint singularity forces subdivision") {
  const QuadratureConfig cfg;
  const auto r = integrate_gk21<double>([](double x) { return std::sqrt(x); }, 0.0, 1.0, cfg);
  CHECK(std::abs(r.value - 2.0 / 3.0) < 1e-12);
  CHECK(r.subdivisions > 1);

  const auto l = integrate_gk21<double>([](double x) { return std::log(x); }, 0.0, 1.0, cfg);
  CHECK(std::abs(l.value + 1.0) < 1e-11);
}

TEST_CASE("vector and complex integrands share the panel tree") {
  const QuadratureConfig cfg;
  const std::array<double, 3> bp{0.0, 1.0, kPi};
  const auto v = integrate_gk21<std::array<double, 2>>(
      [](double x) { return std::array<double, 2>{std::sin(x), std::cos(x)}; }, std::span<const double>(bp), cfg);
  CHECK(std::abs(v.value[0] - 2.0) < 1e-13);
  CHECK(std::abs(v.value[1]) < 1e-13);

  const auto c = integrate_gk21<std::complex<double>>(
      [](double x) { return std::exp(std::complex<double>(0.0, x)); }, 0.0, kPi / 2, cfg);
  CHECK(std::abs(c.value - std::complex<double>(1.0, 1.0)) < 1e-13);
}

TEST_CASE("exhausted budget throws, raw variant reports") {
  auto wild = [](double x) { return std::sin(1.0 / (x + 1e-6)); };
  const auto raw = integrate_gk21_raw<double>(wild, std::array<double, 2>{0.0, 1.0}, 1e-14, 1e-14, 4);
  CHECK_FALSE(raw.converged);
  QuadratureConfig cfg;
  cfg.max_subdivisions = 4;
  try {
    integrate_gk21<double>(wild, 0.0, 1.0, cfg);
    FAIL("expected non_convergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::non_convergence);
  }
}

TEST_CASE("config validation") {
  QuadratureConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.abs_tol = -1.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  const QuadratureConfig t = QuadratureConfig{}.tightened(100.0);
  CHECK(t.abs_tol == doctest::Approx(1e-15));
  CHECK(t.rel_tol == doctest::Approx(1e-13));
}

TEST_CASE("exponential tail helpers") {
  // int_L^inf (x - c)^m e^{-a x} dx against quadrature on a long finite range
  const double a = 0.7, c = 0.5, lower = 3.0;
  for (int m = 0; m <= 4; ++m) {
    const auto q = integrate_gk21<double>([&](double x) { return std::pow(x - c, m) * std::exp(-a * x); }, lower,
                                          200.0, QuadratureConfig{});
    CHECK(weighted_exponential_tail(a, m, c, lower) == doctest::Approx(q.value).epsilon(1e-12));
  }
  const double l = exponential_tail_cutoff(2.0, 3, 1e-15, 1.0);
  CHECK(std::pow(l, 3) * std::exp(-2.0 * l) <= 1e-15);
  CHECK(l >= 1.0);
  CHECK(exponential_tail_cutoff(2.0, 0, 1.0, 5.0) == 5.0);
}
