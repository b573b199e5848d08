#include "polyfock/orthopoly.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "polyfock/errors.hpp"

namespace polyfock::orthopoly {
namespace {

void check_degree(int n, const char* what) {
  if (n < 0 || n > kDegreeCap) {
    throw DomainError(std::string(what) + ": degree " + std::to_string(n) + " outside [0, " +
                      std::to_string(kDegreeCap) + "]");
  }
}

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

constexpr int kLogFactorialTable = 4096;

const std::array<double, kLogFactorialTable + 1>& log_factorial_table() {
  static const auto table = [] {
    std::array<double, kLogFactorialTable + 1> t{};
    long double acc = 0.0L;
    t[0] = 0.0;
    for (int k = 1; k <= kLogFactorialTable; ++k) {
      acc += std::log(static_cast<long double>(k));
      t[k] = static_cast<double>(acc);
    }
    return t;
  }();
  return table;
}

// Plain recurrence, alpha > -1 already checked by the caller.
double laguerre_recurrence(int n, double alpha, double t) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - t;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - t) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  if (n <= kLogFactorialTable) return log_factorial_table()[static_cast<std::size_t>(n)];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double hermite(int n, double x) {
  check_degree(n, "hermite");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int n, double alpha, double t) {
  check_degree(n, "laguerre");
  if (alpha > -1.0) return laguerre_recurrence(n, alpha, t);
  if (alpha != std::floor(alpha)) {
    throw DomainError("laguerre: non-integer order " + std::to_string(alpha) + " <= -1");
  }
  const int k = static_cast<int>(-alpha);
  if (k > n) {
    throw DomainError("laguerre: order -" + std::to_string(k) + " needs degree >= " +
                      std::to_string(k) + ", got " + std::to_string(n));
  }
  // Szego: L_n^{(-k)}(t) = (-t)^k (n-k)!/n! L_{n-k}^{(k)}(t)
  const double ratio = std::exp(log_factorial(n - k) - log_factorial(n));
  return std::pow(-t, k) * ratio * laguerre_recurrence(n - k, static_cast<double>(k), t);
}

double laguerre_coefficient(int n, double alpha, int i) {
  check_degree(n, "laguerre_coefficient");
  if (i < 0 || i > n) return 0.0;
  // binom(n+alpha, n-i) = prod_{l=0}^{n-i-1} (n+alpha-l) / (n-i)!
  const int k = n - i;
  long double num = 1.0L;
  for (int l = 0; l < k; ++l) num *= static_cast<long double>(n) + alpha - l;
  const long double denom = std::exp(static_cast<long double>(log_factorial(k)) +
                                     static_cast<long double>(log_factorial(i)));
  const long double sign = (i % 2 == 0) ? 1.0L : -1.0L;
  return static_cast<double>(sign * num / denom);
}

double laguerre_power_sum(int n, double alpha, double t) {
  check_degree(n, "laguerre_power_sum");
  long double acc = 0.0L;
  long double tp = 1.0L;
  for (int i = 0; i <= n; ++i) {
    acc += static_cast<long double>(laguerre_coefficient(n, alpha, i)) * tp;
    tp *= t;
  }
  return static_cast<double>(acc);
}

double hyp1f1(double a, double b, double u) {
  if (is_nonpositive_integer(b)) {
    throw DomainError("hyp1f1: b = " + std::to_string(b) + " is a non-positive integer");
  }
  long double term = 1.0L;
  long double sum = 1.0L;
  if (is_nonpositive_integer(a)) {
    const int n = static_cast<int>(-a);
    for (int j = 0; j < n; ++j) {
      term *= (static_cast<long double>(a) + j) / (static_cast<long double>(b) + j) * u / (j + 1);
      sum += term;
    }
    return static_cast<double>(sum);
  }
  int small_in_a_row = 0;
  for (int j = 0; j < kHyp1f1TermCap; ++j) {
    term *= (static_cast<long double>(a) + j) / (static_cast<long double>(b) + j) * u / (j + 1);
    sum += term;
    if (!std::isfinite(sum)) {
      throw ConvergenceError("hyp1f1: partial sums overflowed after " + std::to_string(j + 1) + " terms");
    }
    if (std::abs(term) <= 1e-16L * std::abs(sum)) {
      if (++small_in_a_row == 2) return static_cast<double>(sum);
    } else {
      small_in_a_row = 0;
    }
  }
  throw ConvergenceError("hyp1f1: series did not converge within " +
                         std::to_string(kHyp1f1TermCap) + " terms");
}

HermiteFunctionSequence::HermiteFunctionSequence(double x)
    : x_(x), log_scale_(-0.5 * x * x - 0.25 * std::log(std::numbers::pi)) {}

double HermiteFunctionSequence::value() const {
  if (cur_ == 0.0) return 0.0;
  return std::copysign(std::exp(std::log(std::abs(cur_)) + log_scale_), cur_);
}

void HermiteFunctionSequence::advance() {
  const double p = p_;
  const double next = std::sqrt(2.0 / (p + 1.0)) * x_ * cur_ - std::sqrt(p / (p + 1.0)) * prev_;
  prev_ = cur_;
  cur_ = next;
  ++p_;
  constexpr double kRescale = 1e150;
  if (std::abs(cur_) > kRescale) {
    cur_ /= kRescale;
    prev_ /= kRescale;
    log_scale_ += std::log(kRescale);
  }
}

double hermite_function(int p, double x) {
  check_degree(p, "hermite_function");
  HermiteFunctionSequence seq(x);
  while (seq.index() < p) seq.advance();
  return seq.value();
}

std::vector<double> hermite_functions(int pmax, double x) {
  check_degree(pmax, "hermite_functions");
  std::vector<double> out(static_cast<std::size_t>(pmax) + 1);
  HermiteFunctionSequence seq(x);
  for (int p = 0; p <= pmax; ++p) {
    out[static_cast<std::size_t>(p)] = seq.value();
    if (p < pmax) seq.advance();
  }
  return out;
}

}  // namespace polyfock::orthopoly
