#pragma once

// Exact polynomials in the formal variables z and zbar with rational
// coefficients, and the Landau operator  -d^2/dz dzbar + zbar d/dzbar.

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <string>
#include <utility>

namespace polyfock::bipoly {

using Rational = boost::multiprecision::cpp_rational;

/// Largest index accepted by `ito_polynomial`.
inline constexpr int kIndexCap = 64;

/// Finite sum of c_{a,b} z^a zbar^b. Zero coefficients are never stored.
class BiPolynomial {
 public:
  /// (exponent of z, exponent of zbar)
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Rational>;

  BiPolynomial() = default;

  static BiPolynomial constant(const Rational& c);
  static BiPolynomial monomial(int z_exp, int zbar_exp, const Rational& c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of z^a zbar^b (zero when absent).
  Rational coefficient(int z_exp, int zbar_exp) const;

  /// Swaps the roles of z and zbar. Coefficients are real, so this is
  /// complex conjugation of the represented function.
  BiPolynomial conjugate() const;

  BiPolynomial& operator+=(const BiPolynomial& rhs);
  BiPolynomial& operator-=(const BiPolynomial& rhs);
  BiPolynomial& operator*=(const Rational& s);

  friend BiPolynomial operator+(BiPolynomial lhs, const BiPolynomial& rhs) { return lhs += rhs; }
  friend BiPolynomial operator-(BiPolynomial lhs, const BiPolynomial& rhs) { return lhs -= rhs; }
  friend BiPolynomial operator*(BiPolynomial lhs, const Rational& s) { return lhs *= s; }
  friend BiPolynomial operator*(const Rational& s, BiPolynomial rhs) { return rhs *= s; }
  friend BiPolynomial operator*(const BiPolynomial& lhs, const BiPolynomial& rhs);
  friend BiPolynomial operator-(BiPolynomial p) { return p *= Rational(-1); }
  friend bool operator==(const BiPolynomial&, const BiPolynomial&) = default;

  /// Human-readable form such as "z^2*zbar - 2*z".
  std::string to_string() const;

 private:
  void add_term(int z_exp, int zbar_exp, const Rational& c);

  Terms terms_;
};

/// h_{m,p}(z) = sum_j (-1)^j m! p! / (j! (m-j)! (p-j)!) z^{m-j} zbar^{p-j}.
BiPolynomial ito_polynomial(int m, int p);

BiPolynomial d_dz(const BiPolynomial& p);
BiPolynomial d_dzbar(const BiPolynomial& p);

/// -d^2 p / dz dzbar + zbar * dp/dzbar
BiPolynomial landau_apply(const BiPolynomial& p);

struct EigenReport {
  bool is_eigenvector = false;
  /// Meaningful only when is_eigenvector holds.
  Rational eigenvalue;
  /// landau_apply(p) - eigenvalue * p; zero iff is_eigenvector.
  BiPolynomial residual;
};

/// Exact eigen-test of the Landau operator. Throws DomainError on zero input.
EigenReport eigencheck(const BiPolynomial& p);

/// Numerical value at z (zbar = conj(z)); Horner in z per zbar power, then in zbar.
std::complex<double> eval(const BiPolynomial& p, std::complex<double> z);

}  // namespace polyfock::bipoly
