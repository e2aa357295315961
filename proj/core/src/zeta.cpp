#include "argbound/zeta.hpp"

#include <array>
#include <cmath>
#include <string>

#include "argbound/error.hpp"
#include "argbound/summation.hpp"

namespace argbound {
namespace {

constexpr int kBernoulliTerms = 8;
constexpr int kMaxTerms = 1 << 22;

// B_{2k} for k = 1..9; the ninth only feeds the remainder estimate.
constexpr std::array<double, 9> kBernoulli = {
    1.0 / 6.0,      -1.0 / 30.0,  1.0 / 42.0,       -1.0 / 30.0,     5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,   -3617.0 / 510.0,  43867.0 / 798.0,
};

// B_{2k} / (2k)!
const std::array<double, 9>& bernoulli_scaled() {
  static const std::array<double, 9> table = [] {
    std::array<double, 9> out{};
    double fact = 1.0;
    for (int k = 1; k <= 9; ++k) {
      fact *= (2.0 * k - 1.0) * (2.0 * k);
      out[k - 1] = kBernoulli[k - 1] / fact;
    }
    return out;
  }();
  return table;
}

struct EmTail {
  ComplexValue value;
  ComplexValue derivative;
  double remainder;
};

// N^{1-s}/(s-1) + N^{-s}/2 + sum_k B_{2k}/(2k)! s(s+1)..(s+2k-2) N^{-s-2k+1},
// its s-derivative, and the Rademacher-style estimate of the next term.
EmTail em_tail(ComplexValue s, int n_terms) {
  const auto& coeff = bernoulli_scaled();
  const double big_n = n_terms;
  const double log_n = std::log(big_n);
  const ComplexValue n_pow = std::exp(-s * log_n);  // N^{-s}
  const ComplexValue n_pow1 = n_pow * big_n;         // N^{1-s}
  const ComplexValue sm1 = s - 1.0;

  CompensatedSum<ComplexValue> value(n_pow1 / sm1);
  value += 0.5 * n_pow;
  CompensatedSum<ComplexValue> deriv(-log_n * n_pow1 / sm1);
  deriv += -n_pow1 / (sm1 * sm1);
  deriv += -0.5 * log_n * n_pow;

  ComplexValue poly = s;
  ComplexValue dpoly = 1.0;
  ComplexValue npow_k = n_pow / big_n;  // N^{-s-1}
  for (int k = 1; k <= kBernoulliTerms; ++k) {
    value += coeff[k - 1] * poly * npow_k;
    deriv += coeff[k - 1] * (dpoly - log_n * poly) * npow_k;
    for (int j = 2 * k - 1; j <= 2 * k; ++j) {
      dpoly = dpoly * (s + static_cast<double>(j)) + poly;
      poly *= (s + static_cast<double>(j));
    }
    npow_k /= big_n * big_n;
  }
  const double shift = 2.0 * kBernoulliTerms + 1.0;
  const double rem = std::abs(coeff[kBernoulliTerms] * poly * npow_k) * std::abs(s + shift) /
                     (s.real() + shift);
  return {value.value(), deriv.value(), rem};
}

void check_pole(ComplexValue s, const QuadratureConfig& cfg) {
  if (std::abs(s - 1.0) < cfg.abs_tol) {
    throw Error(ErrorKind::pole, "zeta evaluated within abs_tol of s = 1");
  }
  if (s.real() <= -(2.0 * kBernoulliTerms + 1.0)) {
    throw Error(ErrorKind::domain, "Euler-Maclaurin evaluation requires Re s > -17");
  }
}

bool remainder_ok(const EmTail& tail, ComplexValue value, const QuadratureConfig& cfg) {
  return tail.remainder <= cfg.rel_tol * std::max(std::abs(value), 1e-6);
}

}  // namespace

int euler_maclaurin_terms(double t) noexcept {
  return std::max(static_cast<int>(std::ceil(std::abs(t) / 2.0)) + 10, 20);
}

ZetaPair zeta_with_derivative(ComplexValue s, const QuadratureConfig& cfg) {
  check_pole(s, cfg);
  for (int n_terms = euler_maclaurin_terms(s.imag()); n_terms <= kMaxTerms; n_terms *= 2) {
    CompensatedSum<ComplexValue> value(1.0);
    CompensatedSum<ComplexValue> deriv;
    for (int n = 2; n < n_terms; ++n) {
      const double ln = std::log(static_cast<double>(n));
      const ComplexValue term = std::exp(-s * ln);
      value += term;
      deriv += -ln * term;
    }
    const EmTail tail = em_tail(s, n_terms);
    value += tail.value;
    deriv += tail.derivative;
    if (remainder_ok(tail, value.value(), cfg)) return {value.value(), deriv.value()};
  }
  throw Error(ErrorKind::non_convergence, "Euler-Maclaurin term budget exhausted");
}

ComplexValue zeta(ComplexValue s, const QuadratureConfig& cfg) { return zeta_with_derivative(s, cfg).value; }

ComplexValue zeta_log_deriv(ComplexValue s, const QuadratureConfig& cfg) {
  const ZetaPair z = zeta_with_derivative(s, cfg);
  if (std::abs(z.value) < kZetaFloor) {
    throw Error(ErrorKind::near_singularity, "|zeta(s)| below floor in zeta'/zeta");
  }
  return z.derivative / z.value;
}

ZetaLine::ZetaLine(double t, const QuadratureConfig& cfg) : t_(t), cfg_(cfg) {
  int n_terms = euler_maclaurin_terms(t);
  // Remainder is largest at the left edge of the half-plane we use.
  while (n_terms <= kMaxTerms) {
    const EmTail tail = em_tail({0.5, t}, n_terms);
    if (tail.remainder <= cfg.rel_tol) break;
    n_terms *= 2;
  }
  if (n_terms > kMaxTerms) throw Error(ErrorKind::non_convergence, "Euler-Maclaurin term budget exhausted");
  log_n_.reserve(n_terms - 2);
  phase_.reserve(n_terms - 2);
  for (int n = 2; n < n_terms; ++n) {
    const double ln = std::log(static_cast<double>(n));
    log_n_.push_back(ln);
    phase_.push_back(std::polar(1.0, -t * ln));
  }
}

ZetaPair ZetaLine::evaluate(double sigma) const {
  const ComplexValue s{sigma, t_};
  check_pole(s, cfg_);
  CompensatedSum<ComplexValue> value(1.0);
  CompensatedSum<ComplexValue> deriv;
  for (std::size_t i = 0; i < log_n_.size(); ++i) {
    const ComplexValue term = std::exp(-sigma * log_n_[i]) * phase_[i];
    value += term;
    deriv += -log_n_[i] * term;
  }
  const EmTail tail = em_tail(s, terms());
  value += tail.value;
  deriv += tail.derivative;
  return {value.value(), deriv.value()};
}

ComplexValue ZetaLine::log_deriv(double sigma) const {
  const ZetaPair z = evaluate(sigma);
  if (std::abs(z.value) < kZetaFloor) {
    throw Error(ErrorKind::near_singularity, "|zeta| below floor at sigma = " + std::to_string(sigma));
  }
  return z.derivative / z.value;
}

ComplexValue digamma(ComplexValue z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw Error(ErrorKind::pole, "digamma at a nonpositive integer");
  }
  if (z.real() < 0.5) {
    return digamma(1.0 - z) - kPi / std::tan(kPi * z);
  }
  CompensatedSum<ComplexValue> acc;
  while (std::abs(z) < 10.0) {
    acc += -1.0 / z;
    z += 1.0;
  }
  acc += std::log(z);
  acc += -0.5 / z;
  const ComplexValue inv2 = 1.0 / (z * z);
  ComplexValue pw = inv2;
  for (int k = 1; k <= kBernoulliTerms; ++k) {
    acc += -kBernoulli[k - 1] / (2.0 * k) * pw;
    pw *= inv2;
  }
  return acc.value();
}

ComplexValue log_gamma(ComplexValue z) {
  if (!(z.real() > 0.0)) throw Error(ErrorKind::domain, "log_gamma requires Re z > 0");
  CompensatedSum<ComplexValue> acc;
  while (std::abs(z) < 10.0) {
    acc += -std::log(z);
    z += 1.0;
  }
  acc += (z - 0.5) * std::log(z);
  acc += -z;
  acc += 0.5 * std::log(2.0 * kPi);
  const ComplexValue inv = 1.0 / z;
  const ComplexValue inv2 = inv * inv;
  ComplexValue pw = inv;
  for (int k = 1; k <= kBernoulliTerms; ++k) {
    acc += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * pw;
    pw *= inv2;
  }
  return acc.value();
}

double riemann_siegel_theta_continued(double t) {
  if (!(t >= 0.0)) throw Error(ErrorKind::domain, "theta requires t >= 0");
  return log_gamma({0.25, 0.5 * t}).imag() - 0.5 * t * std::log(kPi);
}

double riemann_siegel_theta(double t) {
  if (!(t >= 2.0)) throw Error(ErrorKind::domain, "riemann_siegel_theta requires t >= 2");
  return riemann_siegel_theta_continued(t);
}

}  // namespace argbound
