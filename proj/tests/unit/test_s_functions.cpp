#include <doctest.h>

#include <cmath>
#include <vector>

#include "argbound/s_functions.hpp"
#include "support.hpp"

using namespace argbound;
using testing_support::zeros100;
using testing_support::zeros2600;

namespace {

// int_{1/2}^inf int_{s1}^inf int_{s2}^inf log|zeta(s3)| ds3 ds2 ds1, by three cumulative
// trapezoid passes from the right. sigma = 1 is a node; next to it log|sigma - 1| is
// integrated exactly and only the smooth remainder log|(sigma - 1) zeta| by trapezoid.
double nested_triple_log_zeta() {
  std::vector<double> x;
  for (int i = 0; i <= 3500; ++i) x.push_back(0.5 + i / 1000.0);
  for (int i = 1; i <= 3600; ++i) x.push_back(4.0 + i / 100.0);
  const std::size_t n = x.size();
  // (s - 1) zeta(s) -> 1 at the pole, so the smooth part is 0 there
  std::vector<double> smooth(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = x[i];
    smooth[i] = s == 1.0 ? 0.0 : std::log(std::abs((s - 1.0) * zeta({s, 0.0}).real()));
  }
  auto log_dist_integral = [](double a, double b) {
    // int_a^b log|s - 1| ds on an interval with 1 at one end or outside
    auto prim = [](double u) { return u == 0.0 ? 0.0 : u * std::log(std::abs(u)) - u; };
    return prim(b - 1.0) - prim(a - 1.0);
  };

  // the tail beyond 40 is below 2^-40 in every pass
  std::vector<double> f1(n, 0.0), f2(n, 0.0);
  for (std::size_t i = n - 1; i-- > 0;) {
    const double h = x[i + 1] - x[i];
    f1[i] = f1[i + 1] + 0.5 * h * (smooth[i] + smooth[i + 1]) - log_dist_integral(x[i], x[i + 1]);
  }
  for (std::size_t i = n - 1; i-- > 0;) f2[i] = f2[i + 1] + 0.5 * (x[i + 1] - x[i]) * (f1[i] + f1[i + 1]);
  double f3 = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) f3 += 0.5 * (x[i + 1] - x[i]) * (f2[i] + f2[i + 1]);
  return f3;
}

}  // namespace

TEST_CASE("phase-tracked S against zero counting") {
  const QuadratureConfig cfg;
  for (double t : {10.0, 20.0, 50.0, 100.0}) {
    CHECK(std::abs(argument_s(t, cfg) - s_via_counting(zeros100(), t)) < 2e-4);
  }
  CHECK(std::abs(argument_s(10.0, cfg) + 0.0238) < 1e-4);
  CHECK(std::abs(argument_s(20.0, cfg) + 0.3778) < 1e-4);
  CHECK(std::abs(argument_s(2500.123, cfg) - s_via_counting(zeros2600(), 2500.123)) < 2e-4);
  CHECK(std::abs(argument_s(77.7, cfg, 5.0) - argument_s(77.7, cfg, 2.0)) < 1e-10);
  CHECK_THROWS_AS(argument_s(1.0, cfg), Error);
}

TEST_CASE("S below two joins the tracked branch") {
  CHECK(std::abs(s_below_two(2.0 - 1e-12) - argument_s(2.0)) < 1e-8);
  CHECK(s_below_two(0.0) == -1.0);
}

TEST_CASE("midpoint convention and unit jumps") {
  const QuadratureConfig cfg;
  const ZeroTable& z = zeros100();
  const ArgumentValue at = s_of_t(z[0], cfg, z);
  CHECK(at.at_ordinate);
  CHECK(std::abs(at.value - (s_via_counting(z, z[0] - 1e-3) + s_via_counting(z, z[0] + 1e-3)) / 2) < 5e-3);
  CHECK_FALSE(s_of_t(z[0] + 0.1, cfg, z).at_ordinate);
  for (std::size_t k : {0, 1, 10, 50}) {
    const double jump = argument_s(z[k] + 1e-3, cfg) - argument_s(z[k] - 1e-3, cfg);
    CHECK(std::abs(jump - 1.0) < 0.05);
  }
}

TEST_CASE("integration constants") {
  CHECK(constant_Cm(2).value == 0.125);
  CHECK(constant_Cm(4).value == -1.0 / 384);
  CHECK(constant_Cm(6).value == doctest::Approx(1.0 / 46080).epsilon(1e-15));
  CHECK(constant_Cm(2).method == CmMethod::closed_form_even);
  CHECK(constant_Cm(3).method == CmMethod::quadrature_odd);
  // 30-digit reference quadrature of (1/pi) int log|zeta|
  CHECK(std::abs(constant_Cm(1).value - 0.817352768577040563) < 1e-12);
  CHECK_THROWS_AS(constant_Cm(0), Error);
  CHECK_THROWS_AS(constant_Cm(kMaxOrder + 1), Error);
}

TEST_CASE("C_3 against a genuine triple nested integral") {
  const double nested = nested_triple_log_zeta();
  CHECK(std::abs(constant_Cm(3).value + nested / kPi) < 1e-4);
}

TEST_CASE("single integral I_m") {
  const QuadratureConfig cfg;
  const ZeroTable& z = zeros100();
  CHECK(std::abs(i_m_single(0, 50.0, cfg, z) - s_via_counting(z, 50.0)) < 2e-4);
  CHECK(std::abs(i_m_single(1, 50.0, cfg, z) - s_m_iterated(1, 50.0, cfg, z)) < 1e-3);
  CHECK(std::abs(i_m_single(1, 100.0, cfg, z) - s_m_iterated(1, 100.0, cfg, z)) < 1e-3);
  for (int m = 1; m <= 4; ++m) {
    CHECK(std::abs(i_m_single(m, 10.0, cfg, z) - s_m_iterated(m, 10.0, cfg, z)) < 1e-3);
  }
  try {
    i_m_single(0, z[2], cfg, z);
    FAIL("expected at_ordinate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::at_ordinate);
  }
  CHECK(std::isfinite(i_m_single(2, z[2], cfg, z)));
}

TEST_CASE("S_m = I_m cross-check") {
  const QuadratureConfig cfg;
  const ZeroTable& z = zeros100();
  CHECK(sm_crosscheck(1, 30.0, cfg, z).discrepancy < 1e-3);
  CHECK(sm_crosscheck(2, 30.0, cfg, z).discrepancy < 1e-3);
  CHECK(sm_crosscheck(3, 100.0, cfg, z).discrepancy < 5e-3);
  // regression pin, confirmed against an independent 30-digit quadrature
  CHECK(std::abs(s_m_iterated(3, 100.0, cfg, z) + 0.56089) < 1e-4);
}

TEST_CASE("iterated integrals move forward only") {
  const QuadratureConfig cfg;
  const ZeroTable& z = zeros100();
  IteratedIntegrals ii(3, cfg, z);
  const auto a = ii.advance_to(40.0);
  CHECK(a.size() == 3);
  const double s1 = a[0];
  CHECK(ii.position() == 40.0);
  CHECK_THROWS_AS(ii.advance_to(39.0), Error);
  CHECK(s1 == doctest::Approx(s_m_iterated(1, 40.0, cfg, z)).epsilon(1e-12));
  CHECK_THROWS_AS(ii.advance_to(1000.0), Error);
  CHECK_THROWS_AS(IteratedIntegrals(kMaxOrder + 1, cfg, z), Error);

  const std::vector<double> ts{20.0, 30.0, 45.5};
  const auto rows = sm_sweep(2, ts, cfg, z);
  CHECK(rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(rows[i].t == ts[i]);
    CHECK(rows[i].value_iterated == doctest::Approx(s_m_iterated(2, ts[i], cfg, z)).epsilon(1e-12));
  }
}

TEST_CASE("iterated integrals at a rounded ordinate") {
  // 15 significant digits of gamma_1, a few ulps away from the tabulated value
  const QuadratureConfig cfg;
  const ZeroTable& z = zeros100();
  const double t = 14.1347251417347;
  REQUIRE(t != z[0]);
  const double at = s_m_iterated(1, t, cfg, z);
  CHECK(std::abs(at - s_m_iterated(1, z[0], cfg, z)) < 1e-10);
  CHECK(std::abs(at - i_m_single(1, t, cfg, z)) < 1e-3);
}
