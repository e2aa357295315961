#include "argbound/quadrature.hpp"

#include <cmath>

namespace argbound {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::pole: return "pole-at-one";
    case ErrorKind::non_convergence: return "non-convergence";
    case ErrorKind::near_singularity: return "near-singularity";
    case ErrorKind::domain: return "domain";
    case ErrorKind::resource: return "resource";
    case ErrorKind::table_too_small: return "table-too-small";
    case ErrorKind::parse: return "parse";
    case ErrorKind::order_violation: return "order-violation";
    case ErrorKind::empty_file: return "empty-file";
    case ErrorKind::table_exhausted: return "table-exhausted";
    case ErrorKind::coverage: return "coverage";
    case ErrorKind::at_ordinate: return "at-ordinate";
  }
  return "unknown";
}

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0 && abs_tol < 1.0)) throw Error(ErrorKind::domain, "abs_tol must lie in (0, 1)");
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw Error(ErrorKind::domain, "rel_tol must lie in (0, 1)");
  if (max_subdivisions < 1) throw Error(ErrorKind::domain, "max_subdivisions must be >= 1");
  if (!(tail_sigma_max >= 2.0)) throw Error(ErrorKind::domain, "tail_sigma_max must be >= 2");
  if (!(zero_exclusion_eps > 0.0)) throw Error(ErrorKind::domain, "zero_exclusion_eps must be > 0");
}

QuadratureConfig QuadratureConfig::tightened(double factor) const {
  QuadratureConfig out = *this;
  out.abs_tol /= factor;
  out.rel_tol /= factor;
  return out;
}

double exponential_tail_cutoff(double rate, int power, double target, double floor) {
  double lower = std::max(floor, power / rate);
  auto bound = [&](double x) { return power * std::log(x) - rate * x; };
  const double log_target = std::log(target);
  double x = lower;
  while (bound(x) > log_target) x += 1.0;
  return x;
}

double weighted_exponential_tail(double a, int m, double c, double lower) {
  const double d = lower - c;
  // sum_{i=0}^m m!/i! d^i a^{-(m-i+1)}
  double term = 1.0 / a;
  for (int k = 1; k <= m; ++k) term *= k / a;
  double sum = term;
  for (int i = 0; i < m; ++i) {
    term *= d * a / (i + 1);
    sum += term;
  }
  return std::exp(-a * lower) * sum;
}

}  // namespace argbound
