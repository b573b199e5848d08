#include "polyfock/fockbasis.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "polyfock/detail/summation.hpp"
#include "polyfock/errors.hpp"
#include "polyfock/orthopoly.hpp"

namespace polyfock::fockbasis {
namespace {

using orthopoly::log_factorial;

void check_index(BasisIndex idx) {
  if (idx.m < 0 || idx.p < 0 || idx.m > kIndexCap || idx.p > kIndexCap) {
    throw DomainError("fockbasis: index (" + std::to_string(idx.m) + ", " + std::to_string(idx.p) +
                      ") outside [0, " + std::to_string(kIndexCap) + "]");
  }
}

// e^{i (m-p) arg z}, with arg 0 := 0.
std::complex<double> phase(int m, int p, std::complex<double> z) {
  if (m == p) return {1.0, 0.0};
  const double theta = (z == std::complex<double>{}) ? 0.0 : std::arg(z);
  return std::polar(1.0, (m - p) * theta);
}

// Error-free transformations for compensated Horner (long double).
struct TwoTerm {
  long double hi;
  long double lo;
};

TwoTerm two_sum(long double a, long double b) {
  const long double s = a + b;
  const long double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

TwoTerm split(long double a) {
  constexpr int kHalf = (std::numeric_limits<long double>::digits + 1) / 2;
  const long double factor = std::ldexp(1.0L, kHalf) + 1.0L;
  const long double c = factor * a;
  const long double hi = c - (c - a);
  return {hi, a - hi};
}

TwoTerm two_product(long double a, long double b) {
  const long double x = a * b;
  const auto [ah, al] = split(a);
  const auto [bh, bl] = split(b);
  return {x, al * bl - (((x - ah * bh) - al * bh) - ah * bl)};
}

// The sum factors as z^{m-n} zbar^{p-n} * sum_j (-1)^j c_j t^{n-j}, t = |z|^2,
// n = min(m, p). The integer coefficients come from an exact recurrence and
// the alternating polynomial in t is evaluated with compensated Horner, since
// it cancels heavily near its roots.
std::complex<double> finite_sum(int m, int p, std::complex<double> z) {
  const int n = std::min(m, p);
  std::vector<long double> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1.0L;  // j = 0: m! p! / (m! p!)
  for (int j = 0; j < n; ++j) {
    c[static_cast<std::size_t>(j) + 1] =
        -c[static_cast<std::size_t>(j)] * static_cast<long double>(m - j) * static_cast<long double>(p - j) / (j + 1);
  }
  const long double t = static_cast<long double>(z.real()) * z.real() + static_cast<long double>(z.imag()) * z.imag();
  // Horner over descending powers of t: the t^n coefficient is c_0.
  long double acc = c[0];
  long double err = 0.0L;
  for (int j = 1; j <= n; ++j) {
    const auto [prod, pe] = two_product(acc, t);
    const auto [sum, se] = two_sum(prod, c[static_cast<std::size_t>(j)]);
    acc = sum;
    err = err * t + (pe + se);
  }
  const long double radial = acc + err;

  using cld = std::complex<long double>;
  const cld zl(z.real(), z.imag());
  cld mono = 1.0L;
  for (int k = 0; k < m - n; ++k) mono *= zl;
  for (int k = 0; k < p - n; ++k) mono *= std::conj(zl);
  const cld out = radial * mono;
  return {static_cast<double>(out.real()), static_cast<double>(out.imag())};
}

std::complex<double> laguerre_form(int m, int p, std::complex<double> z) {
  const int n = std::min(m, p);
  const int d = std::abs(m - p);
  const double r = std::abs(z);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double radial = std::exp(log_factorial(n)) * std::pow(r, d) *
                        orthopoly::laguerre(n, static_cast<double>(d), r * r);
  return sign * radial * phase(m, p, z);
}

std::complex<double> hyp1f1_form(int m, int p, std::complex<double> z) {
  const int n = std::min(m, p);
  const int d = std::abs(m - p);
  const double r = std::abs(z);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double gamma = sign * std::exp(log_factorial(std::max(m, p)) - log_factorial(d));
  const double radial = gamma * orthopoly::hyp1f1(-n, d + 1.0, r * r) * std::pow(r, d);
  return radial * phase(m, p, z);
}

// log of sqrt(n!/(n+d)!) r^d, the magnitude prefactor of the normalized Laguerre form.
double log_normalized_prefactor(int n, int d, double r) {
  double lp = 0.5 * (log_factorial(n) - log_factorial(n + d));
  if (d > 0) lp += d * std::log(r);
  return lp;
}

std::complex<double> normalized_impl(int m, int p, std::complex<double> z, double extra_log) {
  if (m < 0 || p < 0) throw DomainError("normalized_h: negative index");
  const int n = std::min(m, p);
  const int d = std::abs(m - p);
  const double r = std::abs(z);
  if (d > 0 && r == 0.0) return {0.0, 0.0};
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double lag = orthopoly::laguerre(n, static_cast<double>(d), r * r);
  const double mag = std::exp(log_normalized_prefactor(n, d, r) + extra_log);
  return sign * mag * lag * phase(m, p, z);
}

}  // namespace

std::complex<double> h_eval(BasisIndex idx, std::complex<double> z, Form form) {
  check_index(idx);
  switch (form) {
    case Form::FiniteSum:
      return finite_sum(idx.m, idx.p, z);
    case Form::LaguerreForm:
      return laguerre_form(idx.m, idx.p, z);
    case Form::Hyp1F1Form:
      return hyp1f1_form(idx.m, idx.p, z);
  }
  throw DomainError("h_eval: unknown form");
}

double basis_norm_sq(BasisIndex idx) {
  check_index(idx);
  // direct product: exact through 18! * 18! and at most (64!)^2 ~ 1.6e178
  double out = 1.0;
  for (int k = 2; k <= idx.m; ++k) out *= k;
  for (int k = 2; k <= idx.p; ++k) out *= k;
  return out;
}

std::complex<double> normalized_h(int m, int p, std::complex<double> z) {
  return normalized_impl(m, p, z, 0.0);
}

std::complex<double> normalized_h_damped(int m, int p, std::complex<double> z) {
  return normalized_impl(m, p, z, -0.5 * std::norm(z));
}

std::complex<double> kernel(int m, std::complex<double> z, std::complex<double> w) {
  return std::exp(z * std::conj(w)) * orthopoly::laguerre(m, 0.0, std::norm(z - w));
}

double weight(int m, std::complex<double> z) {
  if (m < 0) throw DomainError("weight: negative level");
  return std::exp(std::norm(z));
}

std::complex<double> kernel_series(int m, std::complex<double> z, std::complex<double> w, int terms) {
  if (terms < 1) throw DomainError("kernel_series: terms must be positive");
  detail::ComplexCompensatedSum sum;
  for (int p = 0; p < terms; ++p) {
    sum.add(normalized_h(p, m, z) * std::conj(normalized_h(p, m, w)));
  }
  return sum.value();
}

}  // namespace polyfock::fockbasis
