#include "argbound/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "argbound/error.hpp"
#include "argbound/summation.hpp"

namespace argbound {

MangoldtTable::MangoldtTable(std::int64_t limit, std::vector<Entry> entries)
    : limit_(limit), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].n < 2 || entries_[i].n > limit_ || (i > 0 && entries_[i].n <= entries_[i - 1].n)) {
      throw Error(ErrorKind::domain, "Mangoldt entries must be ascending within [2, limit]");
    }
  }
}

double MangoldtTable::operator()(std::int64_t n) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                             [](const Entry& e, std::int64_t v) { return e.n < v; });
  return (it != entries_.end() && it->n == n) ? it->value : 0.0;
}

MangoldtTable build_mangoldt(std::int64_t limit, std::int64_t budget) {
  if (limit < 4) throw Error(ErrorKind::domain, "build_mangoldt requires limit >= 4");
  if (limit > budget) {
    throw Error(ErrorKind::resource, "sieve limit " + std::to_string(limit) + " exceeds budget " +
                                         std::to_string(budget));
  }
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::int64_t> primes;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) primes.push_back(i);
    for (std::int64_t p : primes) {
      if (p * i > limit) break;
      composite[p * i] = true;
      if (i % p == 0) break;
    }
  }
  std::vector<MangoldtTable::Entry> entries;
  for (std::int64_t p : primes) {
    const double lp = std::log(static_cast<double>(p));
    for (std::int64_t q = p; q <= limit; q *= p) {
      entries.push_back({q, lp});
      if (q > limit / p) break;
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const MangoldtTable::Entry& a, const MangoldtTable::Entry& b) { return a.n < b.n; });
  return MangoldtTable(limit, std::move(entries));
}

MollifierParams::MollifierParams(double x) : x_(x) {
  if (!(x >= 4.0) || !std::isfinite(x)) throw Error(ErrorKind::domain, "mollifier scale X must be >= 4");
  log_x_ = std::log(x);
  delta_ = 1.0 / log_x_;
  sum_bound_ = static_cast<std::int64_t>(std::ceil(x * x)) - 1;
}

MollifierParams MollifierParams::for_ordinate(double x, double t) {
  if (!(x <= t * t)) throw Error(ErrorKind::domain, "mollifier scale X must satisfy X <= t^2");
  return MollifierParams(x);
}

namespace {

void require_table(const MollifierParams& p, const MangoldtTable& tbl) {
  if (tbl.limit() < p.sum_bound()) {
    throw Error(ErrorKind::table_too_small, "Mangoldt table limit " + std::to_string(tbl.limit()) +
                                                " below " + std::to_string(p.sum_bound()));
  }
}

double taper(std::int64_t n, const MollifierParams& p) {
  const double nn = static_cast<double>(n);
  if (nn <= p.x()) return 1.0;
  return (2.0 * p.log_x() - std::log(nn)) / p.log_x();
}

// sum over the table entries below X^2 of Lambda_X(n) n^{-s} (log n)^{-power}
ComplexValue mollified_sum(const MollifierParams& p, ComplexValue s, int power, const MangoldtTable& tbl) {
  require_table(p, tbl);
  CompensatedSum<ComplexValue> acc;
  for (const auto& e : tbl.entries()) {
    if (e.n > p.sum_bound()) break;
    const double ln = std::log(static_cast<double>(e.n));
    double w = e.value * taper(e.n, p);
    if (power > 0) w /= std::pow(ln, power);
    acc += w * std::exp(-s * ln);
  }
  return acc.value();
}

}  // namespace

double lambda_X(std::int64_t n, const MollifierParams& p, const MangoldtTable& tbl) {
  if (n < 1 || n > p.sum_bound()) throw Error(ErrorKind::domain, "lambda_X requires 1 <= n < X^2");
  if (n > tbl.limit()) throw Error(ErrorKind::table_too_small, "n beyond Mangoldt table");
  return tbl(n) * taper(n, p);
}

ComplexValue dirichlet_sum(const MollifierParams& p, ComplexValue s, const MangoldtTable& tbl) {
  return mollified_sum(p, s, 0, tbl);
}

ComplexValue weighted_dirichlet_sum(const MollifierParams& p, ComplexValue s, int j, const MangoldtTable& tbl) {
  if (j < 0) throw Error(ErrorKind::domain, "weighted_dirichlet_sum requires j >= 0");
  return mollified_sum(p, s, j + 1, tbl);
}

double dirichlet_majorant(const MollifierParams& p, const MangoldtTable& tbl) {
  return dirichlet_sum(p, {0.5, 0.0}, tbl).real();
}

IdentityCheck j1_identity_check(const MollifierParams& p, double t, int m, const MangoldtTable& tbl,
                                const QuadratureConfig& cfg) {
  if (m < 1) throw Error(ErrorKind::domain, "j1_identity_check requires m >= 1");
  require_table(p, tbl);

  std::vector<MangoldtTable::Entry> active;
  for (const auto& e : tbl.entries()) {
    if (e.n > p.sum_bound()) break;
    active.push_back({e.n, e.value * taper(e.n, p)});
  }

  IdentityCheck out;
  if (active.empty()) return out;

  const double sigma1 = p.sigma1();
  const double slowest = std::log(static_cast<double>(active.front().n));
  double weight_total = 0.0;
  for (const auto& e : active) weight_total += e.value;
  const double cutoff = exponential_tail_cutoff(slowest, m, 1e-17 / std::max(weight_total, 1.0),
                                                std::max(cfg.tail_sigma_max, sigma1 + 1.0));
  out.cutoff = cutoff;
  for (const auto& e : active) {
    out.tail_bound += e.value * weighted_exponential_tail(std::log(static_cast<double>(e.n)), m, 0.5, cutoff);
  }

  auto integrand = [&](double sigma) {
    CompensatedSum<ComplexValue> acc;
    for (const auto& e : active) {
      acc += e.value * std::exp(-ComplexValue(sigma, t) * std::log(static_cast<double>(e.n)));
    }
    return std::pow(sigma - 0.5, m) * acc.value();
  };
  std::vector<double> breaks{sigma1};
  for (double b = sigma1 + 0.5; b < cutoff; b *= 2.0) breaks.push_back(b);
  breaks.push_back(cutoff);
  out.quadrature = integrate_gk21<ComplexValue>(integrand, breaks, cfg).value;

  CompensatedSum<ComplexValue> closed;
  double falling = 1.0;  // m!/(m-j)!
  const ComplexValue s1{sigma1, t};
  for (int j = 0; j <= m; ++j) {
    if (j > 0) falling *= (m - j + 1);
    closed += falling * std::pow(p.delta(), m - j) * weighted_dirichlet_sum(p, s1, j, tbl);
  }
  out.closed_form = closed.value();
  out.discrepancy = std::abs(out.quadrature - out.closed_form);
  return out;
}

}  // namespace argbound
