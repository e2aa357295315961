#include "argbound/envelope.hpp"

#include <cmath>
#include <vector>

#include "argbound/error.hpp"
#include "argbound/summation.hpp"
#include "argbound/zeta.hpp"

namespace argbound {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// sum_{j=0}^m m!/(m-j)! (1/e + 1/(2^{j+1} e^2))
double falling_block(int m) {
  const double e1 = std::exp(-1.0);
  const double e2 = std::exp(-2.0);
  CompensatedSum<double> acc;
  double falling = 1.0;
  for (int j = 0; j <= m; ++j) {
    if (j > 0) falling *= (m - j + 1);
    acc += falling * (e1 + e2 / std::ldexp(1.0, j + 1));
  }
  return acc.value();
}

void require_odd(int m) {
  if (m < 1 || m % 2 == 0) throw Error(ErrorKind::domain, "closed-form kernel needs odd m >= 1");
}

}  // namespace

EnvelopeConstants theorem_constant(int m) {
  if (m < 1) throw Error(ErrorKind::domain, "theorem_constant requires m >= 1");
  EnvelopeConstants c;
  c.m = m;
  c.q_bar = std::exp(-1.0) * (1.0 + std::exp(-1.0));
  const double inv = 1.0 / (1.0 - c.q_bar);
  c.a_sum = falling_block(m) * inv;
  c.j2_term = c.q_bar * inv / (m + 1.0);
  c.j3_term = (m % 2 == 1) ? inv / (m * (m + 1.0)) : 0.5 * kPi * inv;
  c.k_total = (c.a_sum + c.j2_term + c.j3_term) / (2.0 * kPi * factorial(m));
  return c;
}

double envelope_bound(int m, double t) {
  if (!(t > std::exp(std::exp(1.0)))) throw Error(ErrorKind::domain, "envelope_bound requires t > e^e");
  const double lt = std::log(t);
  return theorem_constant(m).k_total * lt / std::pow(std::log(lt), m + 1);
}

double g_kernel_series(int m, double y) {
  require_odd(m);
  const double y2 = y * y;
  CompensatedSum<double> acc;
  double pw = 1.0;
  for (int j = 0; j < 60; ++j) {
    const double term = 2.0 * pw / ((m + 2.0 * j) * (m + 2.0 * j + 2.0));
    acc += (j % 2 == 0) ? term : -term;
    if (j >= 11 && term < 1e-18) break;
    pw *= y2;
  }
  return acc.value();
}

double g_kernel_closed(int m, double y) {
  require_odd(m);
  const int p = (m - 1) / 2;
  // arctan y minus its Taylor polynomial through y^{2p-1}
  CompensatedSum<double> rem(std::atan(y));
  for (int j = 1; j <= p; ++j) {
    const double term = std::pow(y, 2 * j - 1) / (2.0 * j - 1.0);
    rem += (j % 2 == 1) ? -term : term;
  }
  const double sign = (p % 2 == 0) ? 1.0 : -1.0;
  return (std::pow(y, -m - 2) + std::pow(y, -m)) * sign * rem.value() - 1.0 / (m * y * y);
}

double g_kernel(int m, double y) {
  require_odd(m);
  if (!(y > 0.0)) throw Error(ErrorKind::domain, "g_kernel requires y > 0");
  return y < kGSwitch ? g_kernel_series(m, y) : g_kernel_closed(m, y);
}

double g_kernel(const KernelParams& kp) { return g_kernel(kp.m, kp.y()); }

double k_gamma_closed(const KernelParams& kp) {
  require_odd(kp.m);
  if (!(kp.delta > 0.0) || !(kp.b >= 0.0)) throw Error(ErrorKind::domain, "kernel needs delta > 0, b >= 0");
  const double scale = std::pow(kp.delta, kp.m + 2);
  const double base = 1.0 / (kp.m * (kp.m + 1.0));
  if (kp.b == 0.0) return -scale * base;
  return scale * (g_kernel(kp.m, kp.y()) - base);
}

double k_gamma_quadrature(const KernelParams& kp, const QuadratureConfig& cfg) {
  if (kp.m < 1) throw Error(ErrorKind::domain, "kernel needs m >= 1");
  if (!(kp.delta > 0.0) || !(kp.b >= 0.0)) throw Error(ErrorKind::domain, "kernel needs delta > 0, b >= 0");
  const double d = kp.delta;
  const double b2 = kp.b * kp.b;
  auto integrand = [&](double v) {
    if (b2 == 0.0) return -d * std::pow(v, kp.m - 1) * (d - v);
    return std::pow(v, kp.m) * (d - v) * (b2 - d * v) / (v * v + b2);
  };
  std::vector<double> breaks{0.0};
  if (kp.b > 0.0 && kp.b < d) {
    for (double f : {0.125, 0.5, 1.0, 2.0}) {
      if (f * kp.b < d) breaks.push_back(f * kp.b);
    }
  }
  breaks.push_back(d);
  return integrate_gk21<double>(integrand, breaks, cfg).value;
}

ScalarIdentity partial_integration_identity(int m, double x, const QuadratureConfig& cfg) {
  if (m < 1) throw Error(ErrorKind::domain, "partial_integration_identity requires m >= 1");
  if (!(x >= 4.0)) throw Error(ErrorKind::domain, "partial_integration_identity requires X >= 4");
  const double a = std::log(x);
  const double sigma1 = 0.5 + 1.0 / a;

  ScalarIdentity out;
  out.cutoff = exponential_tail_cutoff(a, m, 1e-17, std::max(cfg.tail_sigma_max, sigma1 + 1.0));
  out.tail_bound = weighted_exponential_tail(a, m, 0.5, out.cutoff) +
                   weighted_exponential_tail(2.0 * a, m, 0.5, out.cutoff);

  auto integrand = [&](double sigma) {
    const double w = std::exp((0.5 - sigma) * a);
    return std::pow(sigma - 0.5, m) * (1.0 + w) * w;
  };
  std::vector<double> breaks{sigma1};
  for (double b = sigma1 + 0.5; b < out.cutoff; b *= 2.0) breaks.push_back(b);
  breaks.push_back(out.cutoff);
  out.quadrature = integrate_gk21<double>(integrand, breaks, cfg).value;
  out.closed_form = falling_block(m) / std::pow(a, m + 1);
  out.discrepancy = std::abs(out.quadrature - out.closed_form);
  return out;
}

}  // namespace argbound
