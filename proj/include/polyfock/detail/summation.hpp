#pragma once

#include <cmath>
#include <complex>

namespace polyfock::detail {

/// Neumaier (improved Kahan-Babuska) summation. Order of `add` calls fixes
/// the result bit-for-bit.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void add(std::complex<double> v) noexcept {
    re_.add(v.real());
    im_.add(v.imag());
  }
  std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace polyfock::detail
