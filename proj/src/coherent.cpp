#include "polyfock/coherent.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "polyfock/detail/summation.hpp"
#include "polyfock/errors.hpp"
#include "polyfock/fockbasis.hpp"
#include "polyfock/orthopoly.hpp"

namespace polyfock::coherent {
namespace {

using orthopoly::log_factorial;

// Tracks the "three negligible terms in a row" stopping rule.
class TailWatch {
 public:
  explicit TailWatch(double tol) : tol_(tol) {}

  void observe(std::complex<double> term, std::complex<double> partial) {
    const double scale = std::max(1.0, std::abs(partial));
    run_ = (std::abs(term) < tol_ * scale) ? run_ + 1 : 0;
  }
  bool satisfied() const noexcept { return run_ >= 3; }

 private:
  double tol_;
  int run_ = 0;
};

std::complex<double> ipow(std::complex<double> base, int e) {
  std::complex<double> out{1.0, 0.0};
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

}  // namespace

void SeriesControl::validate() const {
  if (max_terms < 1 || max_terms > kMaxTerms) {
    throw DomainError("SeriesControl: max_terms must lie in [1, " + std::to_string(kMaxTerms) + "]");
  }
  if (!(tail_tol > 0.0)) throw DomainError("SeriesControl: tail_tol must be positive");
}

std::complex<double> theta_closed(const CoherentLabel& label, double xi) {
  if (label.m < 0) throw DomainError("theta_closed: negative level");
  const double x = label.z.real();
  const double y = label.z.imag();
  const double envelope = orthopoly::hermite_function(label.m, xi - std::numbers::sqrt2 * x);
  const double sign = (label.m % 2 == 0) ? 1.0 : -1.0;
  return sign * envelope * std::polar(1.0, x * y - std::numbers::sqrt2 * xi * y);
}

SeriesResult theta_series(const CoherentLabel& label, double xi, const SeriesControl& ctrl) {
  ctrl.validate();
  if (label.m < 0 || label.m > orthopoly::kDegreeCap) {
    throw DomainError("theta_series: level outside [0, " + std::to_string(orthopoly::kDegreeCap) + "]");
  }
  // Do not trust the tail test before the coefficients peak (p ~ |z|^2) and
  // before psi_p(xi) leaves its exponentially small region (2p+1 < xi^2).
  const int p_min = static_cast<int>(std::ceil(std::max({static_cast<double>(label.m), std::norm(label.z),
                                                         0.5 * (xi * xi - 1.0)}))) + 2;
  orthopoly::HermiteFunctionSequence psi(xi);
  detail::ComplexCompensatedSum sum;
  TailWatch tail(ctrl.tail_tol);
  SeriesResult result;
  for (int p = 0; p < ctrl.max_terms; ++p) {
    if (p > 0) psi.advance();
    // conj(h_{p,m}) = h_{m,p}
    const std::complex<double> term = fockbasis::normalized_h_damped(label.m, p, label.z) * psi.value();
    sum.add(term);
    result.terms_used = p + 1;
    tail.observe(term, sum.value());
    if (p >= p_min && tail.satisfied()) {
      result.converged = true;
      break;
    }
  }
  result.value = sum.value();
  return result;
}

AdditionSides addition_formula_sides(int n, double a, double b, double beta, double xi,
                                     const SeriesControl& ctrl) {
  ctrl.validate();
  if (!(beta > 0.0)) throw DomainError("addition_formula_sides: beta must be positive");
  if (n < 0 || n > orthopoly::kDegreeCap) throw DomainError("addition_formula_sides: bad degree");

  const std::complex<double> c(a, b);
  const double t = 0.5 * beta * std::norm(c);
  const double log_c = std::log(std::abs(c));
  const double arg_c = std::arg(c);
  const double log_h_base = 0.25 * std::log(std::numbers::pi) + 0.5 * xi * xi;
  const int k_min = n + static_cast<int>(std::ceil(beta * std::norm(c) + 0.5 * xi * xi)) + 3;

  AdditionSides out;
  orthopoly::HermiteFunctionSequence psi(xi);
  detail::ComplexCompensatedSum sum;
  TailWatch tail(ctrl.tail_tol);
  for (int k = 0; k < ctrl.max_terms; ++k) {
    if (k > 0) psi.advance();
    const int j = k - n;
    std::complex<double> term{0.0, 0.0};
    if (c != std::complex<double>{}) {
      // H_k(xi)/k! = psi_k(xi) pi^{1/4} e^{xi^2/2} sqrt(2^k / k!)
      const double log_mag = -j * std::numbers::ln2 + 0.5 * j * std::log(beta) + j * log_c +
                             log_h_base + 0.5 * (k * std::numbers::ln2 - log_factorial(k));
      const double lag = orthopoly::laguerre(n, static_cast<double>(j), t);
      term = std::exp(log_mag) * lag * psi.value() * std::polar(1.0, j * arg_c);
    } else if (j == 0) {
      // c = 0: only j = 0 survives; L_n^{(0)}(0) = 1.
      term = std::exp(log_h_base + 0.5 * (k * std::numbers::ln2 - log_factorial(k))) * psi.value();
    }
    sum.add(term);
    out.terms_used = k + 1;
    tail.observe(term, sum.value());
    if (k >= k_min && tail.satisfied()) {
      out.converged = true;
      break;
    }
  }
  out.lhs = sum.value();

  const double sqrt_beta = std::sqrt(beta);
  out.rhs = std::exp(-0.25 * beta * c * c + sqrt_beta * xi * c - log_factorial(n)) *
            orthopoly::hermite(n, xi - sqrt_beta * a);
  return out;
}

double finite_sum_residual(int m, std::complex<double> z, double xi) {
  if (m < 1 || m > orthopoly::kDegreeCap) {
    throw DomainError("finite_sum_residual: level must lie in [1, " +
                      std::to_string(orthopoly::kDegreeCap) + "]");
  }
  const double t = std::norm(z);
  const std::complex<double> zbar = std::conj(z);
  const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
  orthopoly::HermiteFunctionSequence psi(xi);
  detail::ComplexCompensatedSum sum;
  for (int p = 0; p < m; ++p) {
    if (p > 0) psi.advance();
    const int d = m - p;
    const double sign_p = (p % 2 == 0) ? 1.0 : -1.0;
    const double sqrt_pf = std::exp(0.5 * log_factorial(p));

    const std::complex<double> direct =
        sign_p * sqrt_pf * ipow(zbar, d) * orthopoly::laguerre(p, static_cast<double>(d), t);

    // z^{p-m} L_m^{(p-m)}(t) from explicit coefficients; t^i z^{-d} = zbar^d t^{i-d}.
    std::complex<double> continued{0.0, 0.0};
    for (int i = 0; i <= m; ++i) {
      const double coeff = orthopoly::laguerre_coefficient(m, static_cast<double>(-d), i);
      if (coeff == 0.0) continue;
      if (i >= d) {
        continued += coeff * ipow(zbar, d) * std::pow(t, i - d);
      } else {
        continued += coeff * std::pow(t, i) * (1.0 / ipow(z, d));
      }
    }
    const double factor = sign_m * std::exp(log_factorial(m) - 0.5 * log_factorial(p));
    sum.add((direct - factor * continued) * psi.value());
  }
  return std::abs(sum.value());
}

}  // namespace polyfock::coherent
