#pragma once

// Gauss-Hermite rules on the line and Gauss-Laguerre x trapezoid rules on the
// plane for the Gaussian probability measure dmu = pi^{-1} e^{-|z|^2} dlambda.

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace polyfock::quadrature {

enum class WeightKind { GaussHermite, GaussLaguerre };

inline constexpr int kMaxHermiteNodes = 256;
// Beyond 185 nodes the outermost weights fall below the smallest normal double.
inline constexpr int kMaxLaguerreNodes = 185;

/// Immutable node/weight list. Nodes strictly increasing, weights positive.
class QuadratureRule {
 public:
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights, WeightKind kind);

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  WeightKind kind() const noexcept { return kind_; }
  int size() const noexcept { return static_cast<int>(nodes_.size()); }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  WeightKind kind_;
};

/// n-point rule for weight e^{-x^2}, exact through degree 2n-1. 1 <= n <= 256.
QuadratureRule gauss_hermite(int n);

/// n-point rule for weight e^{-t} on [0, inf), exact through degree 2n-1.
QuadratureRule gauss_laguerre(int n);

inline constexpr int kDefaultLineOrder = 64;
inline constexpr int kDefaultRadialOrder = 80;

/// Radial Gauss-Laguerre in t = r^2 times a uniform angular trapezoid.
/// Node (k, j) sits at z = sqrt(t_k) e^{2 pi i j / N} with weight w_k / N,
/// so that sum of weights = integral of dmu = 1.
class PlanarRule {
 public:
  PlanarRule(QuadratureRule radial, int angular_count);

  /// Default orders for integrands built from h-basis functions of index up to max_index.
  static PlanarRule for_max_index(int max_index, int radial_order = kDefaultRadialOrder);

  const QuadratureRule& radial() const noexcept { return radial_; }
  int angular_count() const noexcept { return angular_count_; }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(radial_.size()) * static_cast<std::size_t>(angular_count_);
  }

  /// Flattened node index -> (z, weight); index = k * angular_count + j.
  std::complex<double> node(std::size_t index) const;
  double weight(std::size_t index) const;

  /// Largest |z| over the nodes.
  double max_radius() const;

 private:
  QuadratureRule radial_;
  int angular_count_;
};

using LineFunction = std::function<std::complex<double>(double)>;
using PlaneFunction = std::function<std::complex<double>(std::complex<double>)>;

/// <f, g> = integral f conj(g) dxi over the real line.
///
/// f and g carry their own Gaussian decay (psi_p, coherent states); the
/// product at each node is multiplied by e^{+x_i^2} so the rule's e^{-x^2}
/// is not counted twice. Linear in f, conjugate-linear in g.
/// Throws NumericError on a non-finite product.
std::complex<double> line_inner(const LineFunction& f, const LineFunction& g,
                                const QuadratureRule& rule);

/// Same, on values already tabulated at the rule's nodes.
std::complex<double> line_inner(std::span<const std::complex<double>> f_values,
                                std::span<const std::complex<double>> g_values,
                                const QuadratureRule& rule);

/// integral F conj(G) dmu over the plane.
std::complex<double> planar_inner(const PlaneFunction& f, const PlaneFunction& g,
                                  const PlanarRule& rule);

std::complex<double> planar_inner(std::span<const std::complex<double>> f_values,
                                  std::span<const std::complex<double>> g_values,
                                  const PlanarRule& rule);

/// Gauss-Hermite weights times e^{x_i^2}: the weights to use against
/// integrands that already contain their full Gaussian.
std::vector<double> scaled_hermite_weights(const QuadratureRule& rule);

}  // namespace polyfock::quadrature
