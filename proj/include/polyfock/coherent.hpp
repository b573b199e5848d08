#pragma once

// Coherent states theta_{z,m} attached to the level-m space A_m, their
// series and closed forms, and numerical verifiers for the two identities
// behind the closed form.

#include <complex>

namespace polyfock::coherent {

struct CoherentLabel {
  std::complex<double> z;
  int m = 0;
};

/// Truncation of the infinite series. A term counts as negligible when its
/// magnitude is below tail_tol * max(1, |partial sum|); the series stops after
/// three negligible terms in a row (Hermite-weighted terms oscillate and can
/// vanish by accident).
struct SeriesControl {
  int max_terms = 600;
  double tail_tol = 1e-17;

  static constexpr int kMaxTerms = 2048;
  void validate() const;
};

struct SeriesResult {
  std::complex<double> value;
  int terms_used = 0;
  /// False when max_terms ran out before the tail criterion was met.
  bool converged = false;
};

/// Closed form:
///   (-1)^m (2^m m! sqrt(pi))^{-1/2}
///     exp(-zbar^2/2 + sqrt(2) xi zbar - |z|^2/2 - xi^2/2) H_m(xi - sqrt(2) Re z).
/// Evaluated as (-1)^m psi_m(xi - sqrt(2) x) e^{i(x y - sqrt(2) xi y)}, z = x + iy,
/// which is the same function without overflow of H_m or the exponential.
std::complex<double> theta_closed(const CoherentLabel& label, double xi);

/// Series form: e^{-|z|^2/2} sum_p conj(h_{p,m}(z)) / sqrt(m! p!) psi_p(xi).
SeriesResult theta_series(const CoherentLabel& label, double xi, const SeriesControl& ctrl = {});

struct AdditionSides {
  std::complex<double> lhs;
  std::complex<double> rhs;
  int terms_used = 0;
  bool converged = false;
};

/// Both sides of the Laguerre-Hermite addition formula
///   sum_{j >= -n} 2^{-j} beta^{j/2} / (j+n)! c^j L_n^{(j)}(beta |c|^2 / 2) H_{j+n}(xi)
///     = (1/n!) exp(-(beta/4) c^2 + sqrt(beta) xi c) H_n(xi - sqrt(beta) a),
/// with c = a + ib. Negative upper indices go through the Szego reduction.
AdditionSides addition_formula_sides(int n, double a, double b, double beta, double xi,
                                     const SeriesControl& ctrl = {});

/// |S| where S is the finite part of the coherent-state series,
///   sum_{p<m} [ (-1)^p sqrt(p!) zbar^{m-p} L_p^{(m-p)}(|z|^2)
///             - (-1)^m m!/sqrt(p!) z^{p-m} L_m^{(p-m)}(|z|^2) ] psi_p(xi),
/// which vanishes identically. The second branch is evaluated from the
/// explicit coefficients of L_m^{(p-m)}, independently of the Szego reduction.
/// Requires m >= 1.
double finite_sum_residual(int m, std::complex<double> z, double xi);

}  // namespace polyfock::coherent
