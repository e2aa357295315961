#pragma once

#include <array>
#include <span>
#include <vector>

#include "argbound/quadrature.hpp"
#include "argbound/zeros.hpp"
#include "argbound/zeta.hpp"

namespace argbound {

/// Highest order supported by the iterated integrals.
inline constexpr int kMaxOrder = 8;

struct ArgumentValue {
  double value = 0.0;
  bool at_ordinate = false;  // midpoint convention applied
};

/// (1/pi) arg zeta(1/2 + it) continued from `corner` + it along the
/// horizontal line. Phase is tracked by bisection until every step moves the
/// argument by less than pi/4 and agrees with the trapezoid estimate from
/// zeta'/zeta. No ordinate checks; t >= 2.
double argument_s(double t, const QuadratureConfig& cfg = {}, double corner = 2.0);

/// S(t) with the midpoint convention (S(t + 2eps) + S(t - 2eps))/2 when t is
/// within cfg.zero_exclusion_eps of a tabulated ordinate.
ArgumentValue s_of_t(double t, const QuadratureConfig& cfg, const ZeroTable& z);

/// S(u) on [0, 2): the counting formula with N = 0 and the continued theta.
double s_below_two(double u);

enum class CmMethod { closed_form_even, quadrature_odd };

struct CmConstant {
  int m = 0;
  double value = 0.0;
  CmMethod method = CmMethod::closed_form_even;
  double tail_bound = 0.0;
};

/// Integration constant of S_m. Even m from the closed form, odd m by one
/// weighted integral of log|zeta(sigma)| over [1/2, inf).
CmConstant constant_Cm(int m, const QuadratureConfig& cfg = {});

/// -(1/pi) Im{(i^m/m!) int_{1/2}^inf (sigma - 1/2)^m zeta'/zeta(sigma + it) dsigma}.
/// m = 0 throws at_ordinate near a zero; m >= 1 takes the midpoint there.
double i_m_single(int m, double t, const QuadratureConfig& cfg, const ZeroTable& z);

/// The same integral with no ordinate handling; `nearest` is the distance
/// from t to the closest zero ordinate and only steers the mesh near 1/2.
double i_m_raw(int m, double t, const QuadratureConfig& cfg, double nearest);

/// S_1 .. S_M carried forward in t. Each step integrates S between
/// consecutive jump points (0, 2 and the zero ordinates) and updates every
/// order from its Taylor polynomial plus one vector quadrature.
class IteratedIntegrals {
 public:
  IteratedIntegrals(int max_order, const QuadratureConfig& cfg, const ZeroTable& z);

  /// Moves forward to t (t >= position()). Returns S_1..S_M at t.
  std::span<const double> advance_to(double t);

  double position() const noexcept { return position_; }
  int max_order() const noexcept { return order_; }

 private:
  void step(double b);

  int order_;
  QuadratureConfig cfg_;
  const ZeroTable* zeros_;
  double position_ = 0.0;
  std::array<double, kMaxOrder> values_{};
};

/// S_m(t) by iterated integration from t = 0.
double s_m_iterated(int m, double t, const QuadratureConfig& cfg, const ZeroTable& z);

struct SmEvaluation {
  int m = 0;
  double t = 0.0;
  double value_iterated = 0.0;
  double value_single = 0.0;
  double discrepancy = 0.0;
  bool at_ordinate = false;
};

/// Both paths at one point. For m = 0 the iterated side is the phase-tracked
/// S(t) and the single side is I_0.
SmEvaluation sm_crosscheck(int m, double t, const QuadratureConfig& cfg, const ZeroTable& z);

/// sm_crosscheck over ascending t, sharing one forward pass of the iterated side.
std::vector<SmEvaluation> sm_sweep(int m, std::span<const double> ts, const QuadratureConfig& cfg,
                                   const ZeroTable& z);

}  // namespace argbound
