#pragma once

#include <complex>
#include <vector>

#include "argbound/quadrature.hpp"

namespace argbound {

using ComplexValue = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

/// |zeta| below this is reported as ErrorKind::near_singularity by the
/// logarithmic derivative; callers must reroute rather than divide.
inline constexpr double kZetaFloor = 1e-9;

struct ZetaPair {
  ComplexValue value;
  ComplexValue derivative;
};

/// Euler-Maclaurin term count for ordinate t before any remainder-driven
/// refinement: max(ceil(|t|/2) + 10, 20).
int euler_maclaurin_terms(double t) noexcept;

/// Riemann zeta by Euler-Maclaurin summation with 8 Bernoulli corrections.
/// The term count starts at euler_maclaurin_terms(Im s) and doubles while the
/// remainder estimate exceeds the tolerance.
ComplexValue zeta(ComplexValue s, const QuadratureConfig& cfg = {});

/// zeta and zeta' from one pass; zeta' comes from the term-wise
/// differentiated series.
ZetaPair zeta_with_derivative(ComplexValue s, const QuadratureConfig& cfg = {});

/// zeta'(s)/zeta(s). Throws near_singularity when |zeta(s)| < kZetaFloor.
ComplexValue zeta_log_deriv(ComplexValue s, const QuadratureConfig& cfg = {});

/// Euler-Maclaurin evaluator bound to one ordinate. The phases n^{-it} are
/// cached, so sweeping sigma at fixed t only pays for real exponentials.
/// Used by the argument tracker and the sigma-integrals.
class ZetaLine {
 public:
  ZetaLine(double t, const QuadratureConfig& cfg = {});

  double t() const noexcept { return t_; }
  int terms() const noexcept { return static_cast<int>(log_n_.size()) + 2; }

  ZetaPair evaluate(double sigma) const;
  ComplexValue log_deriv(double sigma) const;

 private:
  double t_;
  QuadratureConfig cfg_;
  std::vector<double> log_n_;         // log n for n = 2 .. N-1
  std::vector<ComplexValue> phase_;   // n^{-it} for n = 2 .. N-1
};

/// Gamma'/Gamma. Reflection for Re z < 1/2, upward recurrence to |z| >= 10,
/// then the Bernoulli asymptotic series. Throws pole at nonpositive integers.
ComplexValue digamma(ComplexValue z);

/// log Gamma on Re z > 0, continuous branch (real on the positive axis).
ComplexValue log_gamma(ComplexValue z);

/// Riemann-Siegel theta, theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
/// Throws domain for t < 2.
double riemann_siegel_theta(double t);

/// Same function without the t >= 2 gate (defined for t >= 0); covers the
/// stretch below t = 2 where S(t) comes from the counting formula.
double riemann_siegel_theta_continued(double t);

}  // namespace argbound
