#pragma once

// The extended Bargmann transforms B_m : L^2(R) -> A_m,
//
//   B_m[f](z) = (-1)^m (2^m m! sqrt(pi))^{-1/2}
//               * integral f(xi) e^{-xi^2/2 + sqrt(2) xi z - z^2/2} H_m(xi - sqrt(2) Re z) dxi,
//
// evaluated by Gauss-Hermite quadrature, with grid evaluation, Gram matrices
// and inversion by projection onto e_q = h_{q,m} / sqrt(m! q!).
//
// Grid and Gram kernels come in two flavours: the default one parallelizes
// over phase-space points with OpenMP, the *_serial one is the reference.
// Every point is summed in the same fixed order in both, so they agree
// bit-for-bit regardless of thread count.

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "polyfock/coherent.hpp"
#include "polyfock/quadrature.hpp"
#include "polyfock/signal.hpp"

namespace polyfock::transform {

struct TransformConfig {
  int m = 0;
  int line_rule_order = quadrature::kDefaultLineOrder;
  coherent::SeriesControl series_budget{};

  void validate() const;
};

/// Rectangular grid of z values, row-major in (im, re): the re index varies fastest.
struct PhaseSpaceGrid {
  double re_min = 0.0;
  double re_max = 0.0;
  int re_count = 1;
  double im_min = 0.0;
  double im_max = 0.0;
  int im_count = 1;

  void validate() const;
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(re_count) * static_cast<std::size_t>(im_count);
  }
  std::complex<double> point(std::size_t index) const;
};

enum class PointStatus {
  Ok,
  /// |Re z| beyond half the node span: the integrand's Gaussian has moved off the rule.
  ReShiftWarning,
  /// sqrt(2)|Im z| beyond half the node span: oscillation the rule cannot resolve.
  OscillationWarning,
};

std::string_view to_string(PointStatus status);

struct PointValue {
  std::complex<double> z;
  std::complex<double> value;
  PointStatus status = PointStatus::Ok;
};

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  std::complex<double>& operator()(int r, int c) { return data_[index(r, c)]; }
  const std::complex<double>& operator()(int r, int c) const { return data_[index(r, c)]; }
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r * cols_ + c); }
  int rows_;
  int cols_;
  std::vector<std::complex<double>> data_;
};

class ExtendedBargmann {
 public:
  explicit ExtendedBargmann(TransformConfig cfg);

  const TransformConfig& config() const noexcept { return cfg_; }
  const quadrature::QuadratureRule& line_rule() const noexcept { return rule_; }

  /// Integral kernel at (xi, z), without the quadrature weight.
  std::complex<double> kernel(double xi, std::complex<double> z) const;

  PointStatus status_at(std::complex<double> z) const;

  PointValue forward(const signal::Signal& f, std::complex<double> z) const;

  std::vector<PointValue> forward_grid(const signal::Signal& f, const PhaseSpaceGrid& grid) const;
  std::vector<PointValue> forward_grid_serial(const signal::Signal& f, const PhaseSpaceGrid& grid) const;

  /// B_m[f] at every node of a planar rule (parallel; values only).
  std::vector<std::complex<double>> forward_on_rule(const signal::Signal& f,
                                                    const quadrature::PlanarRule& planar) const;

  /// c_q = <F, e_q>_mu for q = 0..q_max, so that f ~ sum_q c_q psi_q.
  std::vector<std::complex<double>> reconstruct(const quadrature::PlaneFunction& values,
                                                const quadrature::PlanarRule& planar, int q_max) const;
  std::vector<std::complex<double>> reconstruct(std::span<const std::complex<double>> values_at_nodes,
                                                const quadrature::PlanarRule& planar, int q_max) const;

  /// G_{qr} = <B_m[psi_q], B_m[psi_r]>_mu by planar quadrature.
  ComplexMatrix gram_matrix(const quadrature::PlanarRule& planar, int q_max) const;
  ComplexMatrix gram_matrix_serial(const quadrature::PlanarRule& planar, int q_max) const;

 private:
  std::vector<std::complex<double>> weighted_samples(const signal::Signal& f) const;
  std::complex<double> apply(std::span<const std::complex<double>> weighted, std::complex<double> z) const;
  ComplexMatrix gram_impl(const quadrature::PlanarRule& planar, int q_max, bool parallel) const;
  std::vector<PointValue> grid_impl(const signal::Signal& f, const PhaseSpaceGrid& grid, bool parallel) const;

  TransformConfig cfg_;
  quadrature::QuadratureRule rule_;
  std::vector<double> scaled_weights_;
};

/// The classical transform pi^{-1/4} integral f(xi) e^{-xi^2/2 + sqrt(2) xi z - z^2/2} dxi,
/// summed literally over the given Gauss-Hermite rule.
std::complex<double> classical_bargmann(const signal::Signal& f, std::complex<double> z,
                                        const quadrature::QuadratureRule& rule);

/// Gauss-Laguerre order that integrates |B_m[psi_q]|^2-type products exactly
/// for q <= q_max. Those are polynomials of degree q_max + m in t = |z|^2, so a
/// few nodes suffice; keeping the planar nodes close to the origin also keeps
/// the line rule inside its resolving range.
int isometry_radial_order(int m, int q_max);

/// Planar rule used by the isometry and round-trip checks.
quadrature::PlanarRule isometry_rule(int m, int q_max);

}  // namespace polyfock::transform
