#pragma once

#include <cmath>
#include <complex>

namespace argbound {

/// Neumaier (improved Kahan) accumulator. Works for double and
/// std::complex<double>; the complex case compensates each component.
template <class T>
class CompensatedSum;

template <>
class CompensatedSum<double> {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init) {}

  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

template <>
class CompensatedSum<std::complex<double>> {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(std::complex<double> init) : re_(init.real()), im_(init.imag()) {}

  void add(std::complex<double> x) noexcept {
    re_.add(x.real());
    im_.add(x.imag());
  }
  CompensatedSum& operator+=(std::complex<double> x) noexcept {
    add(x);
    return *this;
  }
  std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<double> re_;
  CompensatedSum<double> im_;
};

}  // namespace argbound
