#include "argbound/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <string>

#include "argbound/error.hpp"
#include "argbound/summation.hpp"

namespace argbound {

namespace {

constexpr double kFirstOrdinate = 14.134725141734693;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

ZeroTable::ZeroTable(std::vector<double> ordinates, std::string source)
    : ordinates_(std::move(ordinates)), source_(std::move(source)) {
  if (ordinates_.empty()) throw Error(ErrorKind::empty_file, "zero table has no ordinates");
  for (std::size_t i = 0; i < ordinates_.size(); ++i) {
    if (!(ordinates_[i] > 14.0)) {
      throw Error(ErrorKind::domain, "zero ordinate " + std::to_string(i + 1) + " is not above 14");
    }
    if (i > 0 && !(ordinates_[i] > ordinates_[i - 1])) {
      throw Error(ErrorKind::order_violation, "zero ordinate " + std::to_string(i + 1) + " is not ascending");
    }
  }
  if (std::abs(ordinates_.front() - kFirstOrdinate) > 1e-3) {
    throw Error(ErrorKind::domain, "first ordinate is not 14.1347");
  }
}

double ZeroTable::distance_to_nearest(double t) const noexcept {
  auto it = std::lower_bound(ordinates_.begin(), ordinates_.end(), t);
  double d = std::numeric_limits<double>::infinity();
  if (it != ordinates_.end()) d = *it - t;
  if (it != ordinates_.begin()) d = std::min(d, t - *(it - 1));
  return d;
}

ZeroTable parse_zero_table(std::istream& in, const std::string& origin) {
  std::vector<double> values;
  std::string comments;
  std::string line;
  std::size_t line_no = 0;
  double previous = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      const std::string text = trim(body.substr(1));
      if (!text.empty()) {
        if (!comments.empty()) comments += ' ';
        comments += text;
      }
      continue;
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(v)) {
      throw Error(ErrorKind::parse, origin + ":" + std::to_string(line_no) + ": not a decimal literal");
    }
    if (!values.empty() && !(v > previous)) {
      throw Error(ErrorKind::order_violation,
                  origin + ":" + std::to_string(line_no) + ": ordinate not above the previous one");
    }
    values.push_back(v);
    previous = v;
  }
  if (values.empty()) throw Error(ErrorKind::empty_file, origin + ": no ordinates");
  return ZeroTable(std::move(values), comments.empty() ? origin : comments);
}

ZeroTable load_zero_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open zero table " + path.string());
  return parse_zero_table(in, path.filename().string());
}

std::size_t count_zeros_below(const ZeroTable& z, double t) {
  if (t > z.last()) throw Error(ErrorKind::table_exhausted, "t beyond the last tabulated ordinate");
  const auto ords = z.ordinates();
  return static_cast<std::size_t>(std::lower_bound(ords.begin(), ords.end(), t) - ords.begin());
}

double s_via_counting(const ZeroTable& z, double t, double eps) {
  if (!(t >= 2.0)) throw Error(ErrorKind::domain, "s_via_counting requires t >= 2");
  const std::size_t n = count_zeros_below(z, t);
  if (z.distance_to_nearest(t) < eps) throw Error(ErrorKind::at_ordinate, "t within eps of a zero ordinate");
  return static_cast<double>(n) - 1.0 - riemann_siegel_theta(t) / kPi;
}

double theta_prime(double t) {
  const double t2 = t * t;
  return 0.5 * std::log(t / (2.0 * kPi)) - 1.0 / (48.0 * t2) - 7.0 / (1920.0 * t2 * t2);
}

double lorentz_pair_sum(std::span<const double> ordinates, double t, double delta) {
  CompensatedSum<double> acc;
  const double d2 = delta * delta;
  for (double g : ordinates) {
    acc += delta / (d2 + (t - g) * (t - g));
    acc += delta / (d2 + (t + g) * (t + g));
  }
  return acc.value();
}

LorentzSum zero_lorentz_sum(const ZeroTable& z, double t, const MollifierParams& p) {
  if (z.last() < 2.0 * t) {
    throw Error(ErrorKind::coverage, "zero table must reach 2t for the Lorentz sum");
  }
  const double delta = p.delta();
  LorentzSum out;
  out.truncated = lorentz_pair_sum(z.ordinates().first(z.count() - 1), t, delta);
  const double d2 = delta * delta;
  const ZeroTail tail = density_tail(z, z.count() - 1, [&](double g) {
    return ComplexValue(delta / (d2 + (t - g) * (t - g)) + delta / (d2 + (t + g) * (t + g)), 0.0);
  });
  out.tail_estimate = tail.correction.real();
  out.tail_bound = tail.bound;
  return out;
}

namespace {

void check_zero_count(const ZeroTable& z, std::size_t nzeros) {
  if (nzeros == 0 || nzeros >= z.count()) {
    throw Error(ErrorKind::coverage, "truncation must leave at least one tabulated ordinate unused");
  }
}

}  // namespace

FormulaResidual hadamard_residual(ComplexValue s, const ZeroTable& z, std::size_t nzeros,
                                  const QuadratureConfig& cfg) {
  check_zero_count(z, nzeros);
  auto pair = [&](double g) {
    const ComplexValue rho{0.5, g};
    const ComplexValue rho_bar{0.5, -g};
    return 1.0 / (s - rho) + 1.0 / (s - rho_bar) + 1.0 / rho + 1.0 / rho_bar;
  };
  CompensatedSum<ComplexValue> acc;
  for (std::size_t k = 0; k < nzeros; ++k) acc += pair(z[k]);
  const ZeroTail tail = density_tail(z, nzeros, pair);
  acc += tail.correction;

  acc += std::log(2.0 * kPi) - 1.0 - 0.5 * kEulerGamma;
  acc += -1.0 / (s - 1.0);
  acc += -0.5 * digamma(0.5 * s + 1.0);

  FormulaResidual out;
  out.lhs = zeta_log_deriv(s, cfg);
  out.rhs = acc.value();
  out.residual = std::abs(out.lhs - out.rhs);
  out.truncation = nzeros;
  out.tail_bound = tail.bound;
  return out;
}

FormulaResidual explicit_formula_residual(ComplexValue s, const MollifierParams& p, const ZeroTable& z,
                                          std::size_t nzeros, int qmax, const MangoldtTable& tbl,
                                          const QuadratureConfig& cfg) {
  check_zero_count(z, nzeros);
  if (s.real() < 0.5) throw Error(ErrorKind::domain, "explicit_formula_residual requires Re s >= 1/2");
  if (qmax < 0) throw Error(ErrorKind::domain, "qmax must be nonnegative");
  const double log_x = p.log_x();
  auto xpow = [&](ComplexValue w) { return std::exp(w * log_x); };

  CompensatedSum<ComplexValue> acc(-dirichlet_sum(p, s, tbl));
  const ComplexValue one_minus_s = 1.0 - s;
  acc += (xpow(2.0 * one_minus_s) - xpow(one_minus_s)) / (one_minus_s * one_minus_s * log_x);
  for (int q = 1; q <= qmax; ++q) {
    const ComplexValue w = 2.0 * q + s;
    acc += (xpow(-w) - xpow(-2.0 * w)) / (w * w * log_x);
  }
  auto zero_term = [&](double g) {
    ComplexValue sum;
    for (const ComplexValue rho : {ComplexValue(0.5, g), ComplexValue(0.5, -g)}) {
      const ComplexValue d = rho - s;
      sum += (xpow(d) - xpow(2.0 * d)) / (d * d * log_x);
    }
    return sum;
  };
  for (std::size_t k = 0; k < nzeros; ++k) acc += zero_term(z[k]);

  FormulaResidual out;
  out.lhs = zeta_log_deriv(s, cfg);
  out.rhs = acc.value();
  out.residual = std::abs(out.lhs - out.rhs);
  out.truncation = nzeros;
  out.qmax = qmax;
  out.tail_bound = density_tail(z, nzeros, [&](double g) { return ComplexValue(std::abs(zero_term(g)), 0.0); }).bound;
  return out;
}

LorentzBracket lorentz_bracket_check(double t, const MollifierParams& p, const ZeroTable& z,
                                     const MangoldtTable& tbl, double slack) {
  if (!(t >= 10.0)) throw Error(ErrorKind::domain, "relation check requires t >= 10");
  LorentzBracket out;
  out.lhs = zero_lorentz_sum(z, t, p).total();
  out.main = 0.5 * std::log(t);
  out.dirichlet_bound = std::abs(dirichlet_sum(p, {p.sigma1(), t}, tbl));
  out.lower = out.main / (1.0 + kQBar) - slack * out.dirichlet_bound;
  out.upper = out.main / (1.0 - kQBar) + slack * out.dirichlet_bound;
  out.margin_ok = out.lhs >= out.lower && out.lhs <= out.upper;
  return out;
}

}  // namespace argbound
