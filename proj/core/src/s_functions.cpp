#include "argbound/s_functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "argbound/arithmetic.hpp"
#include "argbound/error.hpp"
#include "argbound/summation.hpp"

namespace argbound {

namespace {

constexpr int kInitialSegments = 8;
constexpr int kMaxDepth = 60;

struct PhaseNode {
  double sigma;
  ComplexValue value;
  double slope;  // Im zeta'/zeta = d arg zeta / d sigma
};

class PhaseTracker {
 public:
  PhaseTracker(double t, const QuadratureConfig& cfg) : line_(t, cfg) {}

  PhaseNode node(double sigma) const {
    const ZetaPair p = line_.evaluate(sigma);
    if (std::abs(p.value) < kZetaFloor) {
      throw Error(ErrorKind::near_singularity, "zeta vanishes on the tracking path at t = " +
                                                   std::to_string(line_.t()));
    }
    return {sigma, p.value, (p.derivative / p.value).imag()};
  }

  double track(const PhaseNode& a, const PhaseNode& b, int depth) const {
    const double step = std::arg(b.value / a.value);
    const double predicted = 0.5 * (b.sigma - a.sigma) * (a.slope + b.slope);
    if (std::abs(step) < kPi / 4.0 && std::abs(step - predicted) < kPi / 8.0) return step;
    if (depth >= kMaxDepth) {
      throw Error(ErrorKind::non_convergence, "phase tracking could not resolve the argument");
    }
    const PhaseNode mid = node(0.5 * (a.sigma + b.sigma));
    return track(a, mid, depth + 1) + track(mid, b, depth + 1);
  }

 private:
  ZetaLine line_;
};

const MangoldtTable& small_mangoldt() {
  static const MangoldtTable table = build_mangoldt(256);
  return table;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// int_{1/2}^{2} (sigma - 1/2)^j log|sigma - 1| dsigma
double log_pole_moment(int j) {
  double total = 0.0;
  for (int i = 0; i <= j; ++i) {
    const double k = i + 1.0;
    const double right = -1.0 / (k * k);
    const double left = ((i % 2 == 0) ? 1.0 : -1.0) * std::pow(0.5, k) * (std::log(0.5) / k - 1.0 / (k * k));
    total += binomial(j, i) * std::pow(0.5, j - i) * (right + left);
  }
  return total;
}

void check_order(int m, int lo) {
  if (m < lo || m > kMaxOrder) {
    throw Error(ErrorKind::domain, "order m must lie in [" + std::to_string(lo) + ", " +
                                       std::to_string(kMaxOrder) + "]");
  }
}

}  // namespace

double argument_s(double t, const QuadratureConfig& cfg, double corner) {
  if (!(t >= 2.0)) throw Error(ErrorKind::domain, "argument_s requires t >= 2");
  if (!(corner >= 2.0)) throw Error(ErrorKind::domain, "tracking corner must satisfy sigma >= 2");
  const PhaseTracker tracker(t, cfg);
  PhaseNode prev = tracker.node(corner);
  double phase = std::arg(prev.value);
  for (int i = 1; i <= kInitialSegments; ++i) {
    const double sigma = i == kInitialSegments ? 0.5 : corner + (0.5 - corner) * i / kInitialSegments;
    const PhaseNode next = tracker.node(sigma);
    phase += tracker.track(prev, next, 0);
    prev = next;
  }
  return phase / kPi;
}

double s_below_two(double u) { return -1.0 - riemann_siegel_theta_continued(u) / kPi; }

ArgumentValue s_of_t(double t, const QuadratureConfig& cfg, const ZeroTable& z) {
  if (!(t >= 2.0)) throw Error(ErrorKind::domain, "s_of_t requires t >= 2");
  if (t > z.last()) throw Error(ErrorKind::coverage, "t beyond zero-table coverage");
  const double eps = cfg.zero_exclusion_eps;
  if (z.distance_to_nearest(t) < eps) {
    return {0.5 * (argument_s(t + 2.0 * eps, cfg) + argument_s(t - 2.0 * eps, cfg)), true};
  }
  return {argument_s(t, cfg), false};
}

CmConstant constant_Cm(int m, const QuadratureConfig& cfg) {
  check_order(m, 1);
  CmConstant out;
  out.m = m;
  if (m % 2 == 0) {
    const int k = m / 2;
    out.method = CmMethod::closed_form_even;
    out.value = ((k % 2 == 1) ? 1.0 : -1.0) / (factorial(2 * k) * std::pow(4.0, k));
    return out;
  }
  const int k = (m + 1) / 2;
  const int j = m - 1;
  const double jf = factorial(j);
  auto weight = [&](double sigma) { return std::pow(sigma - 0.5, j) / jf; };

  // log|zeta| = log((sigma - 1) zeta(sigma)) - log|sigma - 1| near the pole
  auto regular = [&](double sigma) {
    const double v = ((sigma - 1.0) * zeta({sigma, 0.0}, cfg)).real();
    return weight(sigma) * std::log(v);
  };
  auto right = [&](double sigma) { return weight(sigma) * std::log(zeta({sigma, 0.0}, cfg).real()); };

  const double upper = cfg.tail_sigma_max;
  const std::array<double, 3> near{0.5, 1.0, 2.0};
  std::vector<double> far{2.0};
  for (double b = 3.0; b < upper; b *= 1.5) far.push_back(b);
  far.push_back(upper);

  CompensatedSum<double> acc(integrate_gk21<double>(regular, near, cfg).value);
  acc += -log_pole_moment(j) / jf;
  acc += integrate_gk21<double>(right, far, cfg).value;
  // log zeta(sigma) = sum Lambda(n)/log n n^{-sigma} beyond the cutoff
  for (const auto& e : small_mangoldt().entries()) {
    const double ln = std::log(static_cast<double>(e.n));
    acc += e.value / ln * weighted_exponential_tail(ln, j, 0.5, upper) / jf;
  }
  const double sign = (k % 2 == 1) ? 1.0 : -1.0;
  out.method = CmMethod::quadrature_odd;
  out.value = sign * acc.value() / kPi;
  out.tail_bound = 2.0 * weighted_exponential_tail(std::log(2.0), j, 0.5, upper) / (jf * kPi);
  return out;
}

double i_m_raw(int m, double t, const QuadratureConfig& cfg, double nearest) {
  check_order(m, 0);
  if (!(t >= 2.0)) throw Error(ErrorKind::domain, "i_m requires t >= 2");
  const ZetaLine line(t, cfg);
  const bool odd = m % 2 == 1;
  auto component = [odd](ComplexValue v) { return odd ? v.real() : v.imag(); };
  auto integrand = [&](double sigma) { return std::pow(sigma - 0.5, m) * component(line.log_deriv(sigma)); };

  const double upper = cfg.tail_sigma_max;
  const double finest = std::max(nearest, 1e-12) / 4.0;
  std::vector<double> breaks{0.5};
  int levels = 0;
  while (0.25 * std::ldexp(1.0, -levels) > finest && levels < 50) ++levels;
  for (int i = levels; i >= 0; --i) breaks.push_back(0.5 + 0.25 * std::ldexp(1.0, -i));
  for (double b : {1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0, 24.0}) {
    if (b < upper) breaks.push_back(b);
  }
  breaks.push_back(upper);

  CompensatedSum<double> acc(integrate_gk21<double>(integrand, breaks, cfg).value);
  // zeta'/zeta = -sum Lambda(n) n^{-s} past the cutoff
  CompensatedSum<ComplexValue> tail;
  for (const auto& e : small_mangoldt().entries()) {
    const double ln = std::log(static_cast<double>(e.n));
    tail += -e.value * std::polar(1.0, -t * ln) * weighted_exponential_tail(ln, m, 0.5, upper);
  }
  acc += component(tail.value());

  const double sign = (m % 4 < 2) ? -1.0 : 1.0;
  return sign * acc.value() / (kPi * factorial(m));
}

double i_m_single(int m, double t, const QuadratureConfig& cfg, const ZeroTable& z) {
  check_order(m, 0);
  if (!(t >= 2.0)) throw Error(ErrorKind::domain, "i_m requires t >= 2");
  if (t > z.last()) throw Error(ErrorKind::coverage, "t beyond zero-table coverage");
  const double eps = cfg.zero_exclusion_eps;
  const double d = z.distance_to_nearest(t);
  if (d >= eps) return i_m_raw(m, t, cfg, d);
  if (m == 0) throw Error(ErrorKind::at_ordinate, "I_0 is undefined at a zero ordinate");
  const double lo = t - 2.0 * eps;
  const double hi = t + 2.0 * eps;
  return 0.5 * (i_m_raw(m, lo, cfg, z.distance_to_nearest(lo)) + i_m_raw(m, hi, cfg, z.distance_to_nearest(hi)));
}

IteratedIntegrals::IteratedIntegrals(int max_order, const QuadratureConfig& cfg, const ZeroTable& z)
    : order_(max_order), cfg_(cfg), zeros_(&z) {
  check_order(max_order, 1);
  for (int k = 1; k <= order_; ++k) values_[k - 1] = constant_Cm(k, cfg_).value;
}

std::span<const double> IteratedIntegrals::advance_to(double t) {
  if (t < position_) throw Error(ErrorKind::domain, "iterated integrals only move forward in t");
  if (t > zeros_->last()) throw Error(ErrorKind::table_exhausted, "t beyond zero-table coverage");
  const auto ords = zeros_->ordinates();
  while (position_ < t) {
    double b = t;
    if (position_ < 2.0) {
      b = std::min(2.0, t);
    } else {
      auto it = std::upper_bound(ords.begin(), ords.end(), position_);
      if (it != ords.end() && *it < t) b = *it;
    }
    step(b);
  }
  return {values_.data(), static_cast<std::size_t>(order_)};
}

void IteratedIntegrals::step(double b) {
  const double a = position_;
  const int order = order_;
  using Vec = std::array<double, kMaxOrder>;
  // nodes closer than this to an ordinate endpoint read S at the guard
  // distance instead; the change to the integral is O(guard^2 log t)
  constexpr double guard = 1e-6;
  const bool near_a = a >= 2.0 && zeros_->distance_to_nearest(a) < guard;
  const bool near_b = b >= 2.0 && zeros_->distance_to_nearest(b) < guard;
  auto integrand = [&](double u) {
    Vec out{};
    double v = u;
    if (near_a) v = std::max(v, a + guard);
    if (near_b) v = std::min(v, b - guard);
    double kernel = u < 2.0 ? s_below_two(u) : argument_s(v, cfg_);
    for (int k = 0; k < order; ++k) {
      out[k] = kernel;
      kernel *= (b - u) / (k + 1);
    }
    return out;
  };
  const double h = b - a;
  Vec piece{};
  const double eps = cfg_.zero_exclusion_eps;
  if (a >= 2.0 && h < eps) {
    // too short to resolve next to an ordinate: S is constant up to O(eps h)
    // here, read it eps away on the side this piece lies
    const auto ords = zeros_->ordinates();
    auto it = std::lower_bound(ords.begin(), ords.end(), 0.5 * (a + b));
    double gamma = it == ords.end() ? ords.back() : *it;
    if (it != ords.begin() && (it == ords.end() || 0.5 * (a + b) - *(it - 1) < *it - 0.5 * (a + b))) gamma = *(it - 1);
    const double c = a >= gamma ? std::max(b, gamma + eps) : std::min(a, gamma - eps);
    double kernel = argument_s(c, cfg_);
    for (int k = 0; k < order; ++k) {
      kernel *= h / (k + 1);
      piece[k] = kernel;
    }
  } else {
    piece = integrate_gk21<Vec>(integrand, a, b, cfg_).value;
  }

  Vec next{};
  for (int k = 1; k <= order; ++k) {
    double acc = piece[k - 1];
    double term = 1.0;  // h^j / j!
    for (int j = 0; j < k; ++j) {
      acc += values_[k - j - 1] * term;
      term *= h / (j + 1);
    }
    next[k - 1] = acc;
  }
  values_ = next;
  position_ = b;
}

double s_m_iterated(int m, double t, const QuadratureConfig& cfg, const ZeroTable& z) {
  check_order(m, 1);
  if (!(t >= 0.0)) throw Error(ErrorKind::domain, "s_m_iterated requires t >= 0");
  IteratedIntegrals ii(m, cfg, z);
  return ii.advance_to(t)[m - 1];
}

SmEvaluation sm_crosscheck(int m, double t, const QuadratureConfig& cfg, const ZeroTable& z) {
  check_order(m, 0);
  SmEvaluation out;
  out.m = m;
  out.t = t;
  if (m == 0) {
    const ArgumentValue s = s_of_t(t, cfg, z);
    out.value_iterated = s.value;
    out.at_ordinate = s.at_ordinate;
  } else {
    out.value_iterated = s_m_iterated(m, t, cfg, z);
    out.at_ordinate = z.distance_to_nearest(t) < cfg.zero_exclusion_eps;
  }
  out.value_single = i_m_single(m, t, cfg, z);
  out.discrepancy = std::abs(out.value_iterated - out.value_single);
  return out;
}

std::vector<SmEvaluation> sm_sweep(int m, std::span<const double> ts, const QuadratureConfig& cfg,
                                   const ZeroTable& z) {
  check_order(m, 0);
  std::vector<SmEvaluation> rows;
  rows.reserve(ts.size());
  if (m == 0) {
    for (double t : ts) rows.push_back(sm_crosscheck(0, t, cfg, z));
    return rows;
  }
  IteratedIntegrals ii(m, cfg, z);
  for (double t : ts) {
    SmEvaluation row;
    row.m = m;
    row.t = t;
    row.value_iterated = ii.advance_to(t)[m - 1];
    row.value_single = i_m_single(m, t, cfg, z);
    row.discrepancy = std::abs(row.value_iterated - row.value_single);
    row.at_ordinate = z.distance_to_nearest(t) < cfg.zero_exclusion_eps;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace argbound
