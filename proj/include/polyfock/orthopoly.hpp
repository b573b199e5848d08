#pragma once

// Hermite and Laguerre polynomials, the confluent hypergeometric 1F1 and the
// Gauss-Hermite functions psi_p. Everything here is pure and reentrant.

#include <vector>

namespace polyfock::orthopoly {

/// Largest polynomial degree accepted at the API boundary.
inline constexpr int kDegreeCap = 512;

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
double hermite(int n, double x);

/// Generalized Laguerre polynomial L_n^{(alpha)}(t).
///
/// For alpha > -1 the three-term recurrence is used. A negative integer
/// order alpha = -k with 1 <= k <= n is reduced through
///   L_n^{(-k)}(t) = (-t)^k (n-k)!/n! L_{n-k}^{(k)}(t).
/// Any other alpha <= -1 throws DomainError.
double laguerre(int n, double alpha, double t);

/// Coefficient of t^i in L_n^{(alpha)}(t): (-1)^i binom(n+alpha, n-i) / i!.
///
/// The binomial is the generalized one, so this is defined for every real
/// alpha, including negative integers (where it vanishes for i < -alpha).
double laguerre_coefficient(int n, double alpha, int i);

/// L_n^{(alpha)}(t) summed from its explicit power series.
///
/// Valid for any real alpha; numerically worse than `laguerre` for large n,
/// kept as an independent evaluation route.
double laguerre_power_sum(int n, double alpha, double t);

/// Confluent hypergeometric 1F1(a; b; u).
///
/// A non-positive integer `a = -n` sums exactly n+1 terms. Otherwise the
/// series runs until two consecutive terms fall below 1e-16 relative to the
/// partial sum, throwing ConvergenceError past kHyp1f1TermCap terms.
/// b in {0, -1, -2, ...} throws DomainError.
double hyp1f1(double a, double b, double u);

inline constexpr int kHyp1f1TermCap = 100000;

/// Normalized Hermite function psi_p(x) = (sqrt(pi) 2^p p!)^{-1/2} e^{-x^2/2} H_p(x).
double hermite_function(int p, double x);

/// psi_0(x) .. psi_{pmax}(x) in one pass.
std::vector<double> hermite_functions(int pmax, double x);

/// ln(n!) with relative error below 1e-14.
double log_factorial(int n);

/// Streams psi_0(x), psi_1(x), ... through the normalized recurrence
///   psi_{p+1} = sqrt(2/(p+1)) x psi_p - sqrt(p/(p+1)) psi_{p-1}
/// carrying a separate log scale so that neither the Gaussian envelope nor
/// the polynomial growth under/overflows. Not subject to kDegreeCap.
class HermiteFunctionSequence {
 public:
  explicit HermiteFunctionSequence(double x);

  int index() const noexcept { return p_; }
  double value() const;
  void advance();

 private:
  double x_;
  int p_ = 0;
  double prev_ = 0.0;
  double cur_ = 1.0;
  double log_scale_;
};

}  // namespace polyfock::orthopoly
