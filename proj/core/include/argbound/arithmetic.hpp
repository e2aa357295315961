#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "argbound/quadrature.hpp"
#include "argbound/zeta.hpp"

namespace argbound {

/// Sieve size above which build_mangoldt refuses with ErrorKind::resource.
inline constexpr std::int64_t kDefaultSieveBudget = 400'000'000;

/// Lambda(n) for 1 <= n <= limit, stored sparsely: only prime powers carry an
/// entry, every other n reads as zero. Immutable once built.
class MangoldtTable {
 public:
  struct Entry {
    std::int64_t n;
    double value;  // log p for n = p^k
  };

  /// Entries must be ascending in n and lie in [2, limit]; no primality check
  /// is made, which lets tests build reduced tables (e.g. only n = 2).
  MangoldtTable(std::int64_t limit, std::vector<Entry> entries);

  std::int64_t limit() const noexcept { return limit_; }
  std::span<const Entry> entries() const noexcept { return entries_; }

  /// Lambda(n); zero for n outside the table or not a prime power.
  double operator()(std::int64_t n) const noexcept;

 private:
  std::int64_t limit_;
  std::vector<Entry> entries_;
};

/// Linear sieve up to `limit`, keeping prime powers only.
MangoldtTable build_mangoldt(std::int64_t limit, std::int64_t budget = kDefaultSieveBudget);

/// Mollifier scale X with sigma_1 = 1/2 + 1/log X and Delta = 1/log X.
class MollifierParams {
 public:
  /// Throws domain unless X >= 4.
  explicit MollifierParams(double x);

  /// Also enforces the upper bound X <= t^2.
  static MollifierParams for_ordinate(double x, double t);

  double x() const noexcept { return x_; }
  double log_x() const noexcept { return log_x_; }
  double sigma1() const noexcept { return 0.5 + delta_; }
  double delta() const noexcept { return delta_; }

  /// Largest integer n with n < X^2 (the strict upper index of every sum).
  std::int64_t sum_bound() const noexcept { return sum_bound_; }

 private:
  double x_;
  double log_x_;
  double delta_;
  std::int64_t sum_bound_;
};

/// Selberg's tapered weight: Lambda(n) up to X, then Lambda(n) log(X^2/n)/log X.
/// Throws domain for n < 1 or n >= X^2, table_too_small if n > table limit.
double lambda_X(std::int64_t n, const MollifierParams& p, const MangoldtTable& tbl);

/// sum_{n < X^2} Lambda_X(n) n^{-s}, compensated.
ComplexValue dirichlet_sum(const MollifierParams& p, ComplexValue s, const MangoldtTable& tbl);

/// sum_{2 <= n < X^2} Lambda_X(n) n^{-s} (log n)^{-(j+1)}.
ComplexValue weighted_dirichlet_sum(const MollifierParams& p, ComplexValue s, int j, const MangoldtTable& tbl);

/// sum_{n < X} Lambda(n)/sqrt(n) + (1/log X) sum_{X <= n <= X^2} Lambda(n) log(X^2/n)/sqrt(n):
/// the trivial majorant of |dirichlet_sum| on Re s >= 1/2.
double dirichlet_majorant(const MollifierParams& p, const MangoldtTable& tbl);

struct IdentityCheck {
  ComplexValue quadrature;
  ComplexValue closed_form;
  double discrepancy = 0.0;
  double tail_bound = 0.0;  // bound on the part of the integral beyond the cutoff
  double cutoff = 0.0;      // sigma where the quadrature stopped
};

/// Repeated integration by parts of
///   int_{sigma_1}^inf (sigma - 1/2)^m sum_n Lambda_X(n) n^{-sigma-it} dsigma
/// against  sum_{j=0}^m m!/(m-j)! Delta^{m-j} sum_n Lambda_X(n) n^{-sigma_1-it} (log n)^{-(j+1)}.
/// The cutoff is pushed past cfg.tail_sigma_max until the neglected tail is
/// below 1e-15.
IdentityCheck j1_identity_check(const MollifierParams& p, double t, int m, const MangoldtTable& tbl,
                                const QuadratureConfig& cfg = {});

}  // namespace argbound
