#include "polyfock/transform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "polyfock/detail/summation.hpp"
#include "polyfock/errors.hpp"
#include "polyfock/fockbasis.hpp"
#include "polyfock/orthopoly.hpp"

namespace polyfock::transform {
namespace {

using cplx = std::complex<double>;

double sign_of_level(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

void TransformConfig::validate() const {
  if (m < 0 || m > orthopoly::kDegreeCap) {
    throw DomainError("TransformConfig: m outside [0, " + std::to_string(orthopoly::kDegreeCap) + "]");
  }
  if (line_rule_order < 1 || line_rule_order > quadrature::kMaxHermiteNodes) {
    throw DomainError("TransformConfig: line_rule_order outside [1, " +
                      std::to_string(quadrature::kMaxHermiteNodes) + "]");
  }
  series_budget.validate();
}

void PhaseSpaceGrid::validate() const {
  if (re_count < 1 || im_count < 1) throw DomainError("PhaseSpaceGrid: counts must be >= 1");
  if (re_count > 1 && !(re_max > re_min)) throw DomainError("PhaseSpaceGrid: re_max must exceed re_min");
  if (im_count > 1 && !(im_max > im_min)) throw DomainError("PhaseSpaceGrid: im_max must exceed im_min");
}

cplx PhaseSpaceGrid::point(std::size_t index) const {
  const auto rc = static_cast<std::size_t>(re_count);
  const auto i_re = static_cast<double>(index % rc);
  const auto i_im = static_cast<double>(index / rc);
  const double re = re_count > 1 ? re_min + i_re * (re_max - re_min) / (re_count - 1) : re_min;
  const double im = im_count > 1 ? im_min + i_im * (im_max - im_min) / (im_count - 1) : im_min;
  return {re, im};
}

std::string_view to_string(PointStatus status) {
  switch (status) {
    case PointStatus::Ok:
      return "ok";
    case PointStatus::ReShiftWarning:
      return "warn:re_shift";
    case PointStatus::OscillationWarning:
      return "warn:oscillation";
  }
  return "unknown";
}

ExtendedBargmann::ExtendedBargmann(TransformConfig cfg)
    : cfg_((cfg.validate(), cfg)),
      rule_(quadrature::gauss_hermite(cfg_.line_rule_order)),
      scaled_weights_(quadrature::scaled_hermite_weights(rule_)) {}

cplx ExtendedBargmann::kernel(double xi, cplx z) const {
  // c_m e^{-xi^2/2 + sqrt2 xi z - z^2/2} H_m(xi - sqrt2 x)
  //   = (-1)^m psi_m(xi - sqrt2 x) e^{|z|^2/2} e^{i(sqrt2 xi y - x y)}
  const double x = z.real();
  const double y = z.imag();
  const double envelope = orthopoly::hermite_function(cfg_.m, xi - std::numbers::sqrt2 * x);
  return sign_of_level(cfg_.m) * envelope * std::exp(0.5 * std::norm(z)) *
         std::polar(1.0, std::numbers::sqrt2 * xi * y - x * y);
}

PointStatus ExtendedBargmann::status_at(cplx z) const {
  const double half_span = rule_.nodes().back();
  if (std::abs(z.real()) > half_span) return PointStatus::ReShiftWarning;
  if (std::numbers::sqrt2 * std::abs(z.imag()) > half_span) return PointStatus::OscillationWarning;
  return PointStatus::Ok;
}

std::vector<cplx> ExtendedBargmann::weighted_samples(const signal::Signal& f) const {
  std::vector<cplx> out(scaled_weights_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const cplx v = f(rule_.nodes()[i]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericError("forward: non-finite signal value", i);
    }
    out[i] = scaled_weights_[i] * v;
  }
  return out;
}

cplx ExtendedBargmann::apply(std::span<const cplx> weighted, cplx z) const {
  const double x = z.real();
  const double y = z.imag();
  const auto nodes = rule_.nodes();
  detail::ComplexCompensatedSum sum;
  for (std::size_t i = 0; i < weighted.size(); ++i) {
    const double xi = nodes[i];
    const double envelope = orthopoly::hermite_function(cfg_.m, xi - std::numbers::sqrt2 * x);
    sum.add(weighted[i] * envelope * std::polar(1.0, std::numbers::sqrt2 * xi * y));
  }
  return sign_of_level(cfg_.m) * std::exp(0.5 * std::norm(z)) * std::polar(1.0, -x * y) * sum.value();
}

PointValue ExtendedBargmann::forward(const signal::Signal& f, cplx z) const {
  const auto weighted = weighted_samples(f);
  return {z, apply(weighted, z), status_at(z)};
}

std::vector<PointValue> ExtendedBargmann::grid_impl(const signal::Signal& f, const PhaseSpaceGrid& grid,
                                                    bool parallel) const {
  grid.validate();
  const auto weighted = weighted_samples(f);
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  std::vector<PointValue> out(grid.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const cplx z = grid.point(static_cast<std::size_t>(k));
    out[static_cast<std::size_t>(k)] = {z, apply(weighted, z), status_at(z)};
  }
  return out;
}

std::vector<PointValue> ExtendedBargmann::forward_grid(const signal::Signal& f,
                                                       const PhaseSpaceGrid& grid) const {
  return grid_impl(f, grid, true);
}

std::vector<PointValue> ExtendedBargmann::forward_grid_serial(const signal::Signal& f,
                                                              const PhaseSpaceGrid& grid) const {
  return grid_impl(f, grid, false);
}

std::vector<cplx> ExtendedBargmann::forward_on_rule(const signal::Signal& f,
                                                    const quadrature::PlanarRule& planar) const {
  const auto weighted = weighted_samples(f);
  const auto n = static_cast<std::ptrdiff_t>(planar.size());
  std::vector<cplx> out(planar.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] = apply(weighted, planar.node(static_cast<std::size_t>(k)));
  }
  return out;
}

std::vector<cplx> ExtendedBargmann::reconstruct(std::span<const cplx> values_at_nodes,
                                                const quadrature::PlanarRule& planar, int q_max) const {
  if (q_max < 0) throw DomainError("reconstruct: q_max must be non-negative");
  if (values_at_nodes.size() != planar.size()) {
    throw DomainError("reconstruct: value count does not match planar rule size");
  }
  const auto nq = static_cast<std::size_t>(q_max) + 1;
  const auto n = static_cast<std::ptrdiff_t>(planar.size());
  // basis[k * nq + q] = e_q(z_k)
  std::vector<cplx> basis(planar.size() * nq);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const cplx z = planar.node(static_cast<std::size_t>(k));
    for (std::size_t q = 0; q < nq; ++q) {
      basis[static_cast<std::size_t>(k) * nq + q] = fockbasis::normalized_h(static_cast<int>(q), cfg_.m, z);
    }
  }
  std::vector<detail::ComplexCompensatedSum> sums(nq);
  for (std::size_t k = 0; k < planar.size(); ++k) {
    const cplx v = values_at_nodes[k];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericError("reconstruct: non-finite transform value", k);
    }
    const double w = planar.weight(k);
    for (std::size_t q = 0; q < nq; ++q) sums[q].add(w * v * std::conj(basis[k * nq + q]));
  }
  std::vector<cplx> out(nq);
  for (std::size_t q = 0; q < nq; ++q) out[q] = sums[q].value();
  return out;
}

std::vector<cplx> ExtendedBargmann::reconstruct(const quadrature::PlaneFunction& values,
                                                const quadrature::PlanarRule& planar, int q_max) const {
  std::vector<cplx> v(planar.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = values(planar.node(k));
  return reconstruct(v, planar, q_max);
}

ComplexMatrix ExtendedBargmann::gram_impl(const quadrature::PlanarRule& planar, int q_max,
                                          bool parallel) const {
  if (q_max < 0) throw DomainError("gram_matrix: q_max must be non-negative");
  const auto nq = static_cast<std::size_t>(q_max) + 1;
  std::vector<std::vector<cplx>> weighted(nq);
  for (std::size_t q = 0; q < nq; ++q) weighted[q] = weighted_samples(signal::hermite_signal(static_cast<int>(q)));

  const auto n = static_cast<std::ptrdiff_t>(planar.size());
  // values[k * nq + q] = B_m[psi_q](z_k)
  std::vector<cplx> values(planar.size() * nq);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const cplx z = planar.node(static_cast<std::size_t>(k));
    for (std::size_t q = 0; q < nq; ++q) {
      values[static_cast<std::size_t>(k) * nq + q] = apply(weighted[q], z);
    }
  }

  std::vector<detail::ComplexCompensatedSum> sums(nq * nq);
  for (std::size_t k = 0; k < planar.size(); ++k) {
    const double w = planar.weight(k);
    const cplx* row = &values[k * nq];
    for (std::size_t q = 0; q < nq; ++q) {
      for (std::size_t r = 0; r < nq; ++r) sums[q * nq + r].add(w * row[q] * std::conj(row[r]));
    }
  }
  ComplexMatrix g(static_cast<int>(nq), static_cast<int>(nq));
  for (std::size_t q = 0; q < nq; ++q) {
    for (std::size_t r = 0; r < nq; ++r) g(static_cast<int>(q), static_cast<int>(r)) = sums[q * nq + r].value();
  }
  return g;
}

ComplexMatrix ExtendedBargmann::gram_matrix(const quadrature::PlanarRule& planar, int q_max) const {
  return gram_impl(planar, q_max, true);
}

ComplexMatrix ExtendedBargmann::gram_matrix_serial(const quadrature::PlanarRule& planar, int q_max) const {
  return gram_impl(planar, q_max, false);
}

cplx classical_bargmann(const signal::Signal& f, cplx z, const quadrature::QuadratureRule& rule) {
  const std::vector<double> w = quadrature::scaled_hermite_weights(rule);
  detail::ComplexCompensatedSum sum;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double xi = rule.nodes()[i];
    const cplx v = w[i] * f(xi) * std::exp(-0.5 * xi * xi + std::numbers::sqrt2 * xi * z - 0.5 * z * z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericError("classical_bargmann: non-finite integrand", i);
    }
    sum.add(v);
  }
  return std::pow(std::numbers::pi, -0.25) * sum.value();
}

int isometry_radial_order(int m, int q_max) {
  if (m < 0 || q_max < 0) throw DomainError("isometry_radial_order: negative index");
  // exact when 2n - 1 >= q_max + m; three spare nodes
  return (q_max + m + 1) / 2 + 3;
}

quadrature::PlanarRule isometry_rule(int m, int q_max) {
  return quadrature::PlanarRule::for_max_index(q_max + m, isometry_radial_order(m, q_max));
}

}  // namespace polyfock::transform
