#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "argbound/error.hpp"

namespace argbound {

/// Tolerances shared by every adaptive or improper integral in the library.
///
/// `tail_sigma_max` is the finite abscissa that stands in for +infinity in
/// sigma-integrals; the portion beyond it is handled analytically by each
/// caller. `zero_exclusion_eps` is the half-width of the t-window that counts
/// as "at a zero ordinate".
struct QuadratureConfig {
  double abs_tol = 1e-13;
  double rel_tol = 1e-11;
  int max_subdivisions = 600;
  double tail_sigma_max = 30.0;
  double zero_exclusion_eps = 1e-4;

  /// Throws ErrorKind::domain when a field violates its documented range.
  void validate() const;

  /// Same config with abs_tol and rel_tol divided by `factor`.
  QuadratureConfig tightened(double factor) const;
};

template <class V>
struct QuadResult {
  V value{};
  double abs_error = 0.0;
  int evaluations = 0;
  int subdivisions = 0;
  bool converged = false;
};

namespace detail {

template <class V>
struct QuadTraits;

template <>
struct QuadTraits<double> {
  static constexpr std::size_t dim = 1;
  static double get(double v, std::size_t) { return v; }
};

template <>
struct QuadTraits<std::complex<double>> {
  static constexpr std::size_t dim = 2;
  static double get(const std::complex<double>& v, std::size_t i) {
    return i == 0 ? v.real() : v.imag();
  }
};

template <std::size_t N>
struct QuadTraits<std::array<double, N>> {
  static constexpr std::size_t dim = N;
  static double get(const std::array<double, N>& v, std::size_t i) { return v[i]; }
};

template <class V>
inline void axpy(V& acc, double w, const V& x) {
  acc += w * x;
}

template <std::size_t N>
inline void axpy(std::array<double, N>& acc, double w, const std::array<double, N>& x) {
  for (std::size_t i = 0; i < N; ++i) acc[i] += w * x[i];
}

template <class V>
inline V scaled(const V& x, double w) {
  return w * x;
}

template <std::size_t N>
inline std::array<double, N> scaled(const std::array<double, N>& x, double w) {
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = w * x[i];
  return out;
}

template <class V>
inline V plus(const V& a, const V& b) {
  return a + b;
}

template <std::size_t N>
inline std::array<double, N> plus(const std::array<double, N>& a, const std::array<double, N>& b) {
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = a[i] + b[i];
  return out;
}

template <class V>
inline double max_abs(const V& v) {
  double m = 0.0;
  for (std::size_t i = 0; i < QuadTraits<V>::dim; ++i) m = std::max(m, std::abs(QuadTraits<V>::get(v, i)));
  return m;
}

// 21-point Kronrod extension of 10-point Gauss (QUADPACK qk21 tables).
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class V>
struct Panel {
  double a;
  double b;
  V value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class V, class F>
Panel<V> gk21_panel(F& f, double a, double b) {
  using T = QuadTraits<V>;
  constexpr std::size_t dim = T::dim;
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<V, 21> fv{};
  fv[0] = f(center);
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    fv[1 + 2 * j] = f(center - dx);
    fv[2 + 2 * j] = f(center + dx);
  }

  V kron = scaled(fv[0], kWgk[10]);
  V gauss{};
  for (std::size_t j = 0; j < 10; ++j) {
    const V pair = plus(fv[1 + 2 * j], fv[2 + 2 * j]);
    axpy(kron, kWgk[j], pair);
    // odd-indexed Kronrod abscissae are the Gauss nodes
    if (j % 2 == 1) axpy(gauss, kWg[j / 2], pair);
  }

  double err = 0.0;
  for (std::size_t c = 0; c < dim; ++c) {
    const double k = T::get(kron, c);
    const double g = T::get(gauss, c);
    const double mean = 0.5 * k;
    double resabs = kWgk[10] * std::abs(T::get(fv[0], c));
    double resasc = kWgk[10] * std::abs(T::get(fv[0], c) - mean);
    for (std::size_t j = 0; j < 10; ++j) {
      const double f1 = T::get(fv[1 + 2 * j], c);
      const double f2 = T::get(fv[2 + 2 * j], c);
      resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
      resasc += kWgk[j] * (std::abs(f1 - mean) + std::abs(f2 - mean));
    }
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double e = std::abs((k - g) * half);
    if (resasc != 0.0 && e != 0.0) e = resasc * std::min(1.0, std::pow(200.0 * e / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) e = std::max(50.0 * eps * resabs, e);
    err = std::max(err, e);
  }
  return {a, b, scaled(kron, half), err};
}

}  // namespace detail

/// Globally adaptive 21-point Gauss-Kronrod integration over consecutive
/// breakpoints. The panel with the largest error estimate is bisected until
/// the summed estimate meets max(abs_tol, rel_tol * |I|) or the subdivision
/// budget is spent. Never throws; check `converged`.
template <class V, class F>
QuadResult<V> integrate_gk21_raw(F&& f, std::span<const double> breakpoints, double abs_tol,
                                 double rel_tol, int max_subdivisions) {
  QuadResult<V> out;
  if (breakpoints.size() < 2) {
    out.converged = true;
    return out;
  }
  std::priority_queue<detail::Panel<V>> heap;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i] == breakpoints[i + 1]) continue;
    heap.push(detail::gk21_panel<V>(f, breakpoints[i], breakpoints[i + 1]));
    out.evaluations += 21;
  }
  auto totals = [&heap]() {
    V sum{};
    double err = 0.0;
    auto copy = heap;
    while (!copy.empty()) {
      sum = detail::plus(sum, copy.top().value);
      err += copy.top().error;
      copy.pop();
    }
    return std::pair<V, double>(sum, err);
  };

  auto [value, error] = totals();
  int panels = static_cast<int>(heap.size());
  while (error > std::max(abs_tol, rel_tol * detail::max_abs(value)) && panels < max_subdivisions) {
    auto worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // panel at machine resolution
    heap.pop();
    auto left = detail::gk21_panel<V>(f, worst.a, mid);
    auto right = detail::gk21_panel<V>(f, mid, worst.b);
    out.evaluations += 42;
    // incremental update keeps the loop O(log n) per step
    value = detail::plus(value, detail::scaled(worst.value, -1.0));
    value = detail::plus(value, detail::plus(left.value, right.value));
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  // re-sum from scratch to drop the drift of the incremental updates
  std::tie(value, error) = totals();
  out.value = value;
  out.abs_error = error;
  out.subdivisions = panels;
  out.converged = error <= std::max(abs_tol, rel_tol * detail::max_abs(value));
  return out;
}

/// Throwing front end: ErrorKind::non_convergence when the budget runs out.
template <class V, class F>
QuadResult<V> integrate_gk21(F&& f, std::span<const double> breakpoints, double abs_tol, double rel_tol,
                             int max_subdivisions) {
  auto r = integrate_gk21_raw<V>(f, breakpoints, abs_tol, rel_tol, max_subdivisions);
  if (!r.converged) {
    throw Error(ErrorKind::non_convergence,
                "adaptive quadrature error " + std::to_string(r.abs_error) + " after " +
                    std::to_string(r.subdivisions) + " panels");
  }
  return r;
}

template <class V, class F>
QuadResult<V> integrate_gk21(F&& f, double a, double b, const QuadratureConfig& cfg) {
  const std::array<double, 2> ends{a, b};
  return integrate_gk21<V>(f, std::span<const double>(ends), cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);
}

template <class V, class F>
QuadResult<V> integrate_gk21(F&& f, std::span<const double> breakpoints, const QuadratureConfig& cfg) {
  return integrate_gk21<V>(f, breakpoints, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);
}

/// Smallest L >= floor with L^power * exp(-rate * L) <= target (rate > 0).
/// Used to push a truncation point far enough that a polynomially weighted
/// exponential tail drops below `target`.
double exponential_tail_cutoff(double rate, int power, double target, double floor);

/// Closed form of  int_L^inf (x - c)^m e^{-a x} dx  for a > 0, integer m >= 0, L >= c.
double weighted_exponential_tail(double a, int m, double c, double lower);

}  // namespace argbound
