#pragma once

#include "argbound/quadrature.hpp"

namespace argbound {

/// Decomposed bound constant K_m for the leading term log t/(log log t)^{m+1}.
struct EnvelopeConstants {
  int m = 0;
  double q_bar = 0.0;
  double a_sum = 0.0;    // sum_j m!/(m-j)! (1/e + 1/(2^{j+1} e^2)), over 1 - q_bar
  double j2_term = 0.0;  // q_bar/((m+1)(1 - q_bar))
  double j3_term = 0.0;  // odd: 1/(m(m+1)(1 - q_bar)); even: (pi/2)/(1 - q_bar)
  double k_total = 0.0;  // (a_sum + j2_term + j3_term)/(2 pi m!)
};

EnvelopeConstants theorem_constant(int m);

/// k_total(m) log t / (log log t)^{m+1}; domain error unless t > e^e.
double envelope_bound(int m, double t);

struct KernelParams {
  int m = 1;
  double delta = 0.0;  // 1/log X
  double b = 0.0;      // |t - gamma|
  double y() const noexcept { return delta / b; }
};

/// Series below this y, closed form above.
inline constexpr double kGSwitch = 0.25;

/// Shape function g(y) for odd m. Tends to 2/(m(m+2)) at 0 and to 0 at infinity.
double g_kernel(int m, double y);
double g_kernel(const KernelParams& kp);

/// The two branches, exposed for the agreement check around kGSwitch.
double g_kernel_series(int m, double y);
double g_kernel_closed(int m, double y);

/// Delta^{m+2} (g(Delta/B) - 1/(m(m+1))); -Delta^{m+2}/(m(m+1)) at B = 0. Odd m.
double k_gamma_closed(const KernelParams& kp);

/// int_0^Delta v^m (Delta - v)(B^2 - Delta v)/(v^2 + B^2) dv by adaptive
/// quadrature. Any m >= 1.
double k_gamma_quadrature(const KernelParams& kp, const QuadratureConfig& cfg = {1e-15, 1e-12, 600, 30.0, 1e-4});

struct ScalarIdentity {
  double quadrature = 0.0;
  double closed_form = 0.0;
  double discrepancy = 0.0;
  double tail_bound = 0.0;
  double cutoff = 0.0;
};

/// int_{sigma_1}^inf (sigma - 1/2)^m (1 + X^{1/2-sigma}) X^{1/2-sigma} dsigma by quadrature against
/// (log X)^{-m-1} sum_{j=0}^m m!/(m-j)! (1/e + 1/(2^{j+1} e^2)).
ScalarIdentity partial_integration_identity(int m, double x, const QuadratureConfig& cfg = {});

}  // namespace argbound
