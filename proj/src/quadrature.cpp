#include "polyfock/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>

#include "polyfock/detail/summation.hpp"
#include "polyfock/errors.hpp"

namespace polyfock::quadrature {
namespace {

constexpr int kNewtonCap = 100;

// Eigenvalues of the symmetric tridiagonal Jacobi matrix, ascending.
std::vector<double> jacobi_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& off) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConstructionError("quadrature: tridiagonal eigen-solve failed");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// Orthonormal Hermite polynomials (weight e^{-x^2}): returns {p_n(x), p_{n-1}(x)}.
std::pair<double, double> orthonormal_hermite(int n, double x) {
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25);
  for (int j = 0; j < n; ++j) {
    const double next =
        x * std::sqrt(2.0 / (j + 1.0)) * cur - std::sqrt(static_cast<double>(j) / (j + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

struct ScaledLaguerre {
  double ln;    // L_n / e^{log_scale}
  double lnm1;  // L_{n-1} / e^{log_scale}
  double log_scale;
};

ScaledLaguerre scaled_laguerre(int n, double t) {
  double prev = 0.0;
  double cur = 1.0;
  double log_scale = 0.0;
  for (int k = 0; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - t) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
    constexpr double kRescale = 1e200;
    if (std::abs(cur) > kRescale) {
      cur /= kRescale;
      prev /= kRescale;
      log_scale += std::log(kRescale);
    }
  }
  return {cur, prev, log_scale};
}

bool converged(double step, double x) { return std::abs(step) <= 1e-14 * std::max(1.0, std::abs(x)); }

}  // namespace

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights,
                               WeightKind kind)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), kind_(kind) {
  if (nodes_.empty() || nodes_.size() != weights_.size()) {
    throw ConstructionError("QuadratureRule: node and weight counts differ or are empty");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!(weights_[i] > 0.0)) {
      throw ConstructionError("QuadratureRule: non-positive weight at node " + std::to_string(i));
    }
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) {
      throw ConstructionError("QuadratureRule: nodes not strictly increasing at " + std::to_string(i));
    }
  }
}

QuadratureRule gauss_hermite(int n) {
  if (n < 1 || n > kMaxHermiteNodes) {
    throw DomainError("gauss_hermite: order " + std::to_string(n) + " outside [1, " +
                      std::to_string(kMaxHermiteNodes) + "]");
  }
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) off(k - 1) = std::sqrt(k / 2.0);
  std::vector<double> nodes = jacobi_eigenvalues(diag, off);
  std::vector<double> weights(static_cast<std::size_t>(n));

  for (int i = 0; i < n; ++i) {
    double x = nodes[static_cast<std::size_t>(i)];
    double deriv = 0.0;
    bool done = false;
    for (int it = 0; it < kNewtonCap && !done; ++it) {
      const auto [pn, pnm1] = orthonormal_hermite(n, x);
      deriv = std::sqrt(2.0 * n) * pnm1;
      const double step = pn / deriv;
      x -= step;
      done = converged(step, x);
    }
    if (!done) throw ConstructionError("gauss_hermite: Newton failed at node " + std::to_string(i));
    const auto [pn, pnm1] = orthonormal_hermite(n, x);
    deriv = std::sqrt(2.0 * n) * pnm1;
    nodes[static_cast<std::size_t>(i)] = x;
    weights[static_cast<std::size_t>(i)] = 2.0 / (deriv * deriv);
  }

  // Exact mirror symmetry about the origin.
  for (int i = 0; i < n / 2; ++i) {
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    const double x = 0.5 * (nodes[hi] - nodes[lo]);
    const double w = 0.5 * (weights[hi] + weights[lo]);
    nodes[lo] = -x;
    nodes[hi] = x;
    weights[lo] = weights[hi] = w;
  }
  if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;

  return {std::move(nodes), std::move(weights), WeightKind::GaussHermite};
}

QuadratureRule gauss_laguerre(int n) {
  if (n < 1 || n > kMaxLaguerreNodes) {
    throw DomainError("gauss_laguerre: order " + std::to_string(n) + " outside [1, " +
                      std::to_string(kMaxLaguerreNodes) + "]");
  }
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + 1.0;
  for (int k = 1; k < n; ++k) off(k - 1) = k;
  std::vector<double> nodes = jacobi_eigenvalues(diag, off);
  std::vector<double> weights(static_cast<std::size_t>(n));

  for (int i = 0; i < n; ++i) {
    double t = nodes[static_cast<std::size_t>(i)];
    bool done = false;
    for (int it = 0; it < kNewtonCap && !done; ++it) {
      const ScaledLaguerre s = scaled_laguerre(n, t);
      // t L_n' = n (L_n - L_{n-1})
      const double step = t * s.ln / (n * (s.ln - s.lnm1));
      t -= step;
      done = converged(step, t);
    }
    if (!done) throw ConstructionError("gauss_laguerre: Newton failed at node " + std::to_string(i));
    const ScaledLaguerre s = scaled_laguerre(n, t);
    // w = 1 / (t L_n'(t)^2) = t / (n^2 (L_n - L_{n-1})^2)
    const double log_w = std::log(t) - 2.0 * std::log(static_cast<double>(n)) -
                         2.0 * (std::log(std::abs(s.ln - s.lnm1)) + s.log_scale);
    nodes[static_cast<std::size_t>(i)] = t;
    weights[static_cast<std::size_t>(i)] = std::exp(log_w);
  }
  return {std::move(nodes), std::move(weights), WeightKind::GaussLaguerre};
}

PlanarRule::PlanarRule(QuadratureRule radial, int angular_count)
    : radial_(std::move(radial)), angular_count_(angular_count) {
  if (radial_.kind() != WeightKind::GaussLaguerre) {
    throw DomainError("PlanarRule: radial rule must be Gauss-Laguerre");
  }
  if (angular_count_ < 1) throw DomainError("PlanarRule: angular_count must be positive");
}

PlanarRule PlanarRule::for_max_index(int max_index, int radial_order) {
  return {gauss_laguerre(radial_order), 4 * max_index + 8};
}

std::complex<double> PlanarRule::node(std::size_t index) const {
  const auto n = static_cast<std::size_t>(angular_count_);
  const double t = radial_.nodes()[index / n];
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(index % n) / angular_count_;
  return std::polar(std::sqrt(t), theta);
}

double PlanarRule::weight(std::size_t index) const {
  return radial_.weights()[index / static_cast<std::size_t>(angular_count_)] / angular_count_;
}

double PlanarRule::max_radius() const { return std::sqrt(radial_.nodes().back()); }

std::vector<double> scaled_hermite_weights(const QuadratureRule& rule) {
  if (rule.kind() != WeightKind::GaussHermite) {
    throw DomainError("scaled_hermite_weights: rule is not Gauss-Hermite");
  }
  std::vector<double> out(static_cast<std::size_t>(rule.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = rule.nodes()[i];
    out[i] = std::exp(std::log(rule.weights()[i]) + x * x);
  }
  return out;
}

std::complex<double> line_inner(std::span<const std::complex<double>> f_values,
                                std::span<const std::complex<double>> g_values,
                                const QuadratureRule& rule) {
  const auto n = static_cast<std::size_t>(rule.size());
  if (f_values.size() != n || g_values.size() != n) {
    throw DomainError("line_inner: value count does not match rule size");
  }
  const std::vector<double> w = scaled_hermite_weights(rule);
  detail::ComplexCompensatedSum sum;
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> prod = f_values[i] * std::conj(g_values[i]);
    if (!std::isfinite(prod.real()) || !std::isfinite(prod.imag())) {
      throw NumericError("line_inner: non-finite integrand", i);
    }
    sum.add(w[i] * prod);
  }
  return sum.value();
}

std::complex<double> line_inner(const LineFunction& f, const LineFunction& g,
                                const QuadratureRule& rule) {
  const auto n = static_cast<std::size_t>(rule.size());
  std::vector<std::complex<double>> fv(n);
  std::vector<std::complex<double>> gv(n);
  for (std::size_t i = 0; i < n; ++i) {
    fv[i] = f(rule.nodes()[i]);
    gv[i] = g(rule.nodes()[i]);
  }
  return line_inner(fv, gv, rule);
}

std::complex<double> planar_inner(std::span<const std::complex<double>> f_values,
                                  std::span<const std::complex<double>> g_values,
                                  const PlanarRule& rule) {
  const std::size_t n = rule.size();
  if (f_values.size() != n || g_values.size() != n) {
    throw DomainError("planar_inner: value count does not match rule size");
  }
  detail::ComplexCompensatedSum sum;
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> prod = f_values[i] * std::conj(g_values[i]);
    if (!std::isfinite(prod.real()) || !std::isfinite(prod.imag())) {
      throw NumericError("planar_inner: non-finite integrand", i);
    }
    sum.add(rule.weight(i) * prod);
  }
  return sum.value();
}

std::complex<double> planar_inner(const PlaneFunction& f, const PlaneFunction& g,
                                  const PlanarRule& rule) {
  const std::size_t n = rule.size();
  std::vector<std::complex<double>> fv(n);
  std::vector<std::complex<double>> gv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> z = rule.node(i);
    fv[i] = f(z);
    gv[i] = g(z);
  }
  return planar_inner(fv, gv, rule);
}

}  // namespace polyfock::quadrature
