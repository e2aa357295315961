#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "argbound/arithmetic.hpp"
#include "argbound/quadrature.hpp"
#include "argbound/zeta.hpp"

namespace argbound {

/// Ascending positive zero ordinates with their provenance. Immutable.
class ZeroTable {
 public:
  /// Validates order and the first-ordinate sanity gate (14.1347 within 1e-3).
  ZeroTable(std::vector<double> ordinates, std::string source);

  std::span<const double> ordinates() const noexcept { return ordinates_; }
  std::size_t count() const noexcept { return ordinates_.size(); }
  const std::string& source() const noexcept { return source_; }
  double operator[](std::size_t i) const noexcept { return ordinates_[i]; }
  double last() const noexcept { return ordinates_.back(); }

  /// |t - gamma| for the closest listed gamma.
  double distance_to_nearest(double t) const noexcept;

 private:
  std::vector<double> ordinates_;
  std::string source_;
};

/// One ordinate per line, '#' comments and blank lines skipped. The comment
/// lines become the source string (or the file name when there are none).
ZeroTable load_zero_table(const std::filesystem::path& path);
ZeroTable parse_zero_table(std::istream& in, const std::string& origin);

/// Ordinates strictly below t. Throws table_exhausted beyond the last one.
std::size_t count_zeros_below(const ZeroTable& z, double t);

/// S(t) = N(t) - 1 - theta(t)/pi. Throws at_ordinate within eps of a zero.
double s_via_counting(const ZeroTable& z, double t, double eps = 1e-4);

/// Density correction for a zero sum cut after the first n ordinates:
///   sum_{gamma > Gamma} f(gamma) ~ -S(Gamma) f(Gamma) + int_Gamma^inf theta'(u)/pi f(u) du,
/// with Gamma the midpoint between gamma_n and gamma_{n+1}.
struct ZeroTail {
  ComplexValue correction;
  double bound = 0.0;  // |S(Gamma) f(Gamma)| + int theta'/pi |f|
  double cutoff = 0.0;
};

/// theta'(t) from the Stirling expansion; accurate to ~1e-10 for t >= 10.
double theta_prime(double t);

template <class F>
ZeroTail density_tail(const ZeroTable& z, std::size_t used, F&& f);

struct LorentzSum {
  double truncated = 0.0;
  double tail_estimate = 0.0;
  double tail_bound = 0.0;
  double total() const noexcept { return truncated + tail_estimate; }
};

/// sum_gamma Delta/(Delta^2 + (t-gamma)^2) + Delta/(Delta^2 + (t+gamma)^2).
/// Requires coverage up to 2t.
LorentzSum zero_lorentz_sum(const ZeroTable& z, double t, const MollifierParams& p);

/// Same pairing over an arbitrary ordinate list, no tail.
double lorentz_pair_sum(std::span<const double> ordinates, double t, double delta);

struct FormulaResidual {
  ComplexValue lhs;
  ComplexValue rhs;
  double residual = 0.0;
  std::size_t truncation = 0;
  int qmax = 0;
  double tail_bound = 0.0;
};

/// zeta'/zeta(s) against the Hadamard expansion with the digamma term, zeros
/// paired with their conjugates, first `nzeros` ordinates plus a density tail.
FormulaResidual hadamard_residual(ComplexValue s, const ZeroTable& z, std::size_t nzeros,
                                  const QuadratureConfig& cfg = {});

/// zeta'/zeta(s) against Selberg's explicit formula with the mollified
/// Dirichlet sum. The zero sum is truncated at `nzeros`; its omitted part is
/// only bounded (tail_bound), not corrected.
FormulaResidual explicit_formula_residual(ComplexValue s, const MollifierParams& p, const ZeroTable& z,
                                          std::size_t nzeros, int qmax, const MangoldtTable& tbl,
                                          const QuadratureConfig& cfg = {});

struct LorentzBracket {
  double lhs = 0.0;
  double main = 0.0;
  double dirichlet_bound = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool margin_ok = false;
};

/// (1/e)(1 + 1/e)
inline const double kQBar = std::exp(-1.0) * (1.0 + std::exp(-1.0));

/// Brackets the zero Lorentz sum by (1/2) log t / (1 +- q_bar) widened by
/// slack * |D(sigma_1 + it)|.
LorentzBracket lorentz_bracket_check(double t, const MollifierParams& p, const ZeroTable& z,
                                     const MangoldtTable& tbl, double slack = 5.0);

// ---------------------------------------------------------------------------

template <class F>
ZeroTail density_tail(const ZeroTable& z, std::size_t used, F&& f) {
  if (used >= z.count()) {
    throw Error(ErrorKind::coverage, "density tail needs one ordinate past the truncation");
  }
  const double gamma = used == 0 ? 0.5 * z[0] : 0.5 * (z[used - 1] + z[used]);
  const double s_gamma = static_cast<double>(used) - 1.0 - riemann_siegel_theta(gamma) / kPi;
  const ComplexValue f_gamma = f(gamma);

  // u = Gamma / gamma maps [Gamma, inf) onto (0, 1]
  auto integrand = [&](double u) {
    const double g = gamma / u;
    const double w = theta_prime(g) / kPi * gamma / (u * u);
    const ComplexValue v = f(g);
    return std::array<double, 3>{w * v.real(), w * v.imag(), w * std::abs(v)};
  };
  const std::array<double, 9> breaks{0.0, 1e-8, 1e-6, 1e-4, 1e-3, 1e-2, 0.1, 0.5, 1.0};
  const auto r = integrate_gk21_raw<std::array<double, 3>>(integrand, breaks, 1e-14, 1e-10, 2000);

  ZeroTail out;
  out.correction = ComplexValue(r.value[0], r.value[1]) - s_gamma * f_gamma;
  out.bound = std::abs(s_gamma * f_gamma) + r.value[2] + r.abs_error;
  out.cutoff = gamma;
  return out;
}

}  // namespace argbound
