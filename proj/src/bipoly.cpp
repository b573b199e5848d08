#include "polyfock/bipoly.hpp"

#include <sstream>
#include <vector>

#include "polyfock/errors.hpp"

namespace polyfock::bipoly {
namespace {

Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace

BiPolynomial BiPolynomial::constant(const Rational& c) { return monomial(0, 0, c); }

BiPolynomial BiPolynomial::monomial(int z_exp, int zbar_exp, const Rational& c) {
  if (z_exp < 0 || zbar_exp < 0) throw DomainError("BiPolynomial: negative exponent");
  BiPolynomial p;
  p.add_term(z_exp, zbar_exp, c);
  return p;
}

void BiPolynomial::add_term(int z_exp, int zbar_exp, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({z_exp, zbar_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational BiPolynomial::coefficient(int z_exp, int zbar_exp) const {
  const auto it = terms_.find({z_exp, zbar_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

BiPolynomial BiPolynomial::conjugate() const {
  BiPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{e.second, e.first}, c);
  return out;
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BiPolynomial& BiPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

BiPolynomial operator*(const BiPolynomial& lhs, const BiPolynomial& rhs) {
  BiPolynomial out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return out;
}

std::string BiPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    const bool bare = e.first == 0 && e.second == 0;
    if (!unit || bare) os << mag;
    auto factor = [&](const char* name, int exp, bool need_star) {
      if (exp == 0) return need_star;
      if (need_star) os << '*';
      os << name;
      if (exp > 1) os << '^' << exp;
      return true;
    };
    bool star = !unit;
    star = factor("z", e.first, star);
    factor("zbar", e.second, star);
  }
  return os.str();
}

BiPolynomial ito_polynomial(int m, int p) {
  if (m < 0 || p < 0 || m > kIndexCap || p > kIndexCap) {
    throw DomainError("ito_polynomial: index outside [0, " + std::to_string(kIndexCap) + "]");
  }
  const Rational mp = factorial(m) * factorial(p);
  BiPolynomial out;
  for (int j = 0; j <= std::min(m, p); ++j) {
    Rational c = mp / (factorial(j) * factorial(m - j) * factorial(p - j));
    if (j % 2 == 1) c = -c;
    out += BiPolynomial::monomial(m - j, p - j, c);
  }
  return out;
}

BiPolynomial d_dz(const BiPolynomial& p) {
  BiPolynomial out;
  for (const auto& [e, c] : p.terms()) {
    if (e.first > 0) out += BiPolynomial::monomial(e.first - 1, e.second, c * e.first);
  }
  return out;
}

BiPolynomial d_dzbar(const BiPolynomial& p) {
  BiPolynomial out;
  for (const auto& [e, c] : p.terms()) {
    if (e.second > 0) out += BiPolynomial::monomial(e.first, e.second - 1, c * e.second);
  }
  return out;
}

BiPolynomial landau_apply(const BiPolynomial& p) {
  const BiPolynomial dzb = d_dzbar(p);
  return BiPolynomial::monomial(0, 1) * dzb - d_dz(dzb);
}

EigenReport eigencheck(const BiPolynomial& p) {
  if (p.is_zero()) throw DomainError("eigencheck: zero polynomial");
  const BiPolynomial image = landau_apply(p);
  const auto& [lead, lead_coeff] = *p.terms().rbegin();
  EigenReport report;
  report.eigenvalue = image.coefficient(lead.first, lead.second) / lead_coeff;
  report.residual = image - p * report.eigenvalue;
  report.is_eigenvector = report.residual.is_zero();
  return report;
}

std::complex<double> eval(const BiPolynomial& p, std::complex<double> z) {
  using cld = std::complex<long double>;
  if (p.is_zero()) return {0.0, 0.0};
  int max_a = 0;
  int max_b = 0;
  for (const auto& [e, c] : p.terms()) {
    max_a = std::max(max_a, e.first);
    max_b = std::max(max_b, e.second);
  }
  // coeffs[b][a]
  std::vector<std::vector<long double>> coeffs(static_cast<std::size_t>(max_b) + 1,
                                               std::vector<long double>(static_cast<std::size_t>(max_a) + 1, 0.0L));
  for (const auto& [e, c] : p.terms()) {
    coeffs[static_cast<std::size_t>(e.second)][static_cast<std::size_t>(e.first)] =
        c.convert_to<long double>();
  }
  const cld zl(z.real(), z.imag());
  const cld zbl = std::conj(zl);
  cld outer = 0.0L;
  for (int b = max_b; b >= 0; --b) {
    cld inner = 0.0L;
    const auto& row = coeffs[static_cast<std::size_t>(b)];
    for (int a = max_a; a >= 0; --a) inner = inner * zl + row[static_cast<std::size_t>(a)];
    outer = outer * zbl + inner;
  }
  return {static_cast<double>(outer.real()), static_cast<double>(outer.imag())};
}

}  // namespace polyfock::bipoly
