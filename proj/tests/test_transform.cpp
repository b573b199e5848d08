#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <omp.h>
#include <random>

#include "oracles.hpp"
#include "polyfock/errors.hpp"
#include "polyfock/fockbasis.hpp"
#include "polyfock/orthopoly.hpp"
#include "polyfock/transform.hpp"

using namespace polyfock;
using namespace polyfock::transform;
using cplx = std::complex<double>;

namespace {

std::vector<cplx> random_points(int count, double radius, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> out;
  for (int i = 0; i < count; ++i) out.push_back(std::polar(radius * std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng)));
  return out;
}

// e_q = h_{q,m} / sqrt(m! q!), the expected image of psi_q
cplx expected_image(int m, int q, cplx z) {
  return fockbasis::h_eval({q, m}, z) / std::sqrt(fockbasis::basis_norm_sq({q, m}));
}

signal::Signal combination(const std::vector<cplx>& coeffs) {
  return [coeffs](double xi) {
    cplx s{0.0, 0.0};
    for (std::size_t q = 0; q < coeffs.size(); ++q) s += coeffs[q] * orthopoly::hermite_function(static_cast<int>(q), xi);
    return s;
  };
}

double max_identity_defect(const ComplexMatrix& g) {
  double worst = 0.0;
  for (int r = 0; r < g.rows(); ++r)
    for (int c = 0; c < g.cols(); ++c) worst = std::max(worst, std::abs(g(r, c) - (r == c ? 1.0 : 0.0)));
  return worst;
}

// The integral written out with H_m from the exact Rodriguez polynomial and
// the complex exponential taken literally, summed over the same nodes.
cplx literal_forward(const signal::Signal& f, int m, cplx z, const quadrature::QuadratureRule& rule) {
  const double c = std::pow(std::ldexp(1.0, m) * std::tgamma(m + 1.0) * std::sqrt(std::numbers::pi), -0.5);
  const auto hm = oracle::hermite_rodriguez(m);
  cplx s{0.0, 0.0};
  for (int i = 0; i < rule.size(); ++i) {
    const double xi = rule.nodes()[i];
    const cplx integrand = f(xi) * std::exp(-0.5 * xi * xi + std::numbers::sqrt2 * xi * z - 0.5 * z * z) *
                           oracle::eval(hm, xi - std::numbers::sqrt2 * z.real());
    s += rule.weights()[i] * std::exp(xi * xi) * integrand;
  }
  return (m % 2 == 0 ? 1.0 : -1.0) * c * s;
}

}  // namespace

TEST(Forward, GroundStateMapsToOne) {
  const ExtendedBargmann t({0});
  for (const cplx z : random_points(30, 2.0, 1)) {
    const auto v = t.forward(signal::hermite_signal(0), z);
    EXPECT_LT(std::abs(v.value - 1.0), 1e-12) << z;
    EXPECT_EQ(v.status, PointStatus::Ok);
  }
}

TEST(Forward, ClassicalImagesOfHermiteFunctions) {
  const ExtendedBargmann t({0});
  for (int q = 0; q <= 10; ++q)
    for (const cplx z : random_points(10, 2.0, 2)) {
      const cplx want = std::pow(z, q) / std::sqrt(std::tgamma(q + 1.0));
      EXPECT_LT(std::abs(t.forward(signal::hermite_signal(q), z).value - want), 1e-10) << q << ' ' << z;
    }
}

TEST(Forward, ImagesAreNormalizedBasisFunctions) {
  for (int m = 0; m <= 6; ++m) {
    const ExtendedBargmann t({m});
    for (int q = 0; q <= 6; ++q)
      for (const cplx z : random_points(10, 2.0, 3)) {
        const cplx got = t.forward(signal::hermite_signal(q), z).value;
        EXPECT_LT(std::abs(got - expected_image(m, q, z)), 1e-9) << m << ' ' << q << ' ' << z;
      }
  }
}

TEST(Forward, MatchesLiteralIntegrand) {
  const auto f = combination({{0.3, 0.1}, {-0.5, 0.0}, {0.0, 0.7}, {0.2, -0.2}});
  for (int m = 0; m <= 6; ++m) {
    const ExtendedBargmann t({m});
    for (const cplx z : random_points(10, 2.0, 4)) {
      const cplx want = literal_forward(f, m, z, t.line_rule());
      EXPECT_LE(std::abs(t.forward(f, z).value - want), 1e-12 * std::max(1.0, std::abs(want))) << m << ' ' << z;
    }
  }
}

TEST(Forward, Linearity) {
  const auto f = combination({{1.0, 0.0}, {0.0, 0.5}, {0.25, 0.0}});
  const auto g = combination({{0.0, 0.0}, {0.3, -0.1}, {0.0, 0.0}, {1.2, 0.0}});
  const cplx alpha(0.7, -0.4);
  const cplx beta(-1.1, 0.2);
  const auto h = [&](double xi) { return alpha * f(xi) + beta * g(xi); };
  for (int m = 0; m <= 4; ++m) {
    const ExtendedBargmann t({m});
    for (const cplx z : random_points(10, 2.0, 5)) {
      const cplx lhs = t.forward(h, z).value;
      const cplx rhs = alpha * t.forward(f, z).value + beta * t.forward(g, z).value;
      EXPECT_LE(std::abs(lhs - rhs), 1e-13 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST(Forward, NonFiniteSignal) {
  const ExtendedBargmann t({1});
  const auto bad = [](double xi) { return xi > 2.0 ? cplx(std::numeric_limits<double>::infinity()) : cplx(1.0); };
  EXPECT_THROW(t.forward(bad, 0.0), NumericError);
}

TEST(Forward, StatusWarnings) {
  const ExtendedBargmann t({2});
  const double half_span = t.line_rule().nodes().back();
  EXPECT_EQ(t.status_at(0.0), PointStatus::Ok);
  EXPECT_EQ(t.status_at({half_span + 0.5, 0.0}), PointStatus::ReShiftWarning);
  EXPECT_EQ(t.status_at({0.0, half_span / std::numbers::sqrt2 + 0.5}), PointStatus::OscillationWarning);
  EXPECT_EQ(t.forward(signal::hermite_signal(0), {-half_span - 1.0, 0.0}).status, PointStatus::ReShiftWarning);
  EXPECT_EQ(to_string(PointStatus::Ok), "ok");
  EXPECT_EQ(to_string(PointStatus::ReShiftWarning), "warn:re_shift");
  EXPECT_EQ(to_string(PointStatus::OscillationWarning), "warn:oscillation");
}

TEST(Config, Validation) {
  EXPECT_THROW(ExtendedBargmann({-1}), DomainError);
  EXPECT_THROW(ExtendedBargmann({0, 0}), DomainError);
  EXPECT_THROW(ExtendedBargmann({0, quadrature::kMaxHermiteNodes + 1}), DomainError);
  EXPECT_THROW(ExtendedBargmann({0, 64, {0, 1e-17}}), DomainError);
  EXPECT_NO_THROW(ExtendedBargmann({3, 32}));
  EXPECT_THROW((PhaseSpaceGrid{0, 1, 0, 0, 1, 2}.validate()), DomainError);
  EXPECT_THROW((PhaseSpaceGrid{1, 1, 3, 0, 1, 2}.validate()), DomainError);
  EXPECT_THROW((PhaseSpaceGrid{0, 1, 2, 1, 0, 2}.validate()), DomainError);
  EXPECT_NO_THROW((PhaseSpaceGrid{0.5, 0.5, 1, 0.2, 0.2, 1}.validate()));
}

TEST(Grid, LayoutIsRowMajorInImaginaryPart) {
  const PhaseSpaceGrid g{-1.0, 1.0, 3, 0.0, 2.0, 2};
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(g.point(0), cplx(-1.0, 0.0));
  EXPECT_EQ(g.point(1), cplx(0.0, 0.0));
  EXPECT_EQ(g.point(2), cplx(1.0, 0.0));
  EXPECT_EQ(g.point(3), cplx(-1.0, 2.0));
  EXPECT_EQ(g.point(5), cplx(1.0, 2.0));
}

TEST(Grid, SinglePointMatchesForward) {
  const ExtendedBargmann t({2});
  const auto f = signal::hermite_signal(3);
  const auto out = t.forward_grid(f, {0.4, 0.4, 1, -0.7, -0.7, 1});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].z, cplx(0.4, -0.7));
  EXPECT_EQ(out[0].value, t.forward(f, {0.4, -0.7}).value);
}

TEST(Grid, GroundStateIsConstant) {
  const ExtendedBargmann t({0});
  for (const auto& pv : t.forward_grid(signal::hermite_signal(0), {-2.0, 2.0, 9, -2.0, 2.0, 9}))
    EXPECT_LT(std::abs(pv.value - 1.0), 1e-12) << pv.z;
}

TEST(Grid, FirstHermiteImageIsOdd) {
  const ExtendedBargmann t({0});
  const auto out = t.forward_grid(signal::hermite_signal(1), {-1.5, 1.5, 7, -1.5, 1.5, 7});
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto& mirror = out[out.size() - 1 - k];
    EXPECT_EQ(mirror.z, -out[k].z);
    EXPECT_LT(std::abs(out[k].value + mirror.value), 1e-12);
  }
}

TEST(Grid, ParallelMatchesSerialBitForBit) {
  const auto f = combination({{0.3, 0.1}, {-0.5, 0.0}, {0.0, 0.7}, {0.2, -0.2}});
  const PhaseSpaceGrid g{-2.5, 2.5, 41, -2.0, 2.0, 33};
  for (const int m : {0, 3}) {
    const ExtendedBargmann t({m});
    const auto serial = t.forward_grid_serial(f, g);
    for (const int threads : {1, 2, 4, 7}) {
      omp_set_num_threads(threads);
      const auto parallel = t.forward_grid(f, g);
      ASSERT_EQ(parallel.size(), serial.size());
      for (std::size_t k = 0; k < serial.size(); ++k) {
        ASSERT_EQ(parallel[k].value, serial[k].value) << threads << ' ' << k;
        ASSERT_EQ(parallel[k].status, serial[k].status);
      }
    }
  }
}

TEST(Classical, Examples) {
  const auto rule = quadrature::gauss_hermite(64);
  EXPECT_LT(std::abs(classical_bargmann(signal::hermite_signal(0), {0.3, 0.8}, rule) - 1.0), 1e-12);
  EXPECT_LT(std::abs(classical_bargmann(signal::hermite_signal(2), 0.0, rule)), 1e-15);
  const cplx z(0.9, -0.4);
  EXPECT_LT(std::abs(classical_bargmann(signal::hermite_signal(2), z, rule) - z * z / std::numbers::sqrt2), 1e-12);
}

TEST(Classical, AgreesWithLevelZero) {
  const ExtendedBargmann t({0});
  std::mt19937_64 rng(6);
  std::normal_distribution<double> n01;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<cplx> c(9);
    for (auto& v : c) v = {n01(rng), n01(rng)};
    const auto f = combination(c);
    for (const cplx z : random_points(10, 2.0, 7 + trial)) {
      const cplx a = classical_bargmann(f, z, t.line_rule());
      const cplx b = t.forward(f, z).value;
      EXPECT_LE(std::abs(a - b), 1e-13 * std::max(1.0, std::abs(a))) << z;
    }
  }
}

TEST(Reconstruct, Examples) {
  for (int m = 0; m <= 4; ++m) {
    const ExtendedBargmann t({m});
    const auto rule = isometry_rule(m, 10);
    const auto c3 = t.reconstruct(t.forward_on_rule(signal::hermite_signal(3), rule), rule, 10);
    ASSERT_EQ(c3.size(), 11u);
    for (int q = 0; q <= 10; ++q) EXPECT_LT(std::abs(c3[q] - (q == 3 ? 1.0 : 0.0)), 1e-7) << m << ' ' << q;

    const auto zero = t.reconstruct([](cplx) { return cplx(0.0); }, rule, 10);
    for (const cplx v : zero) EXPECT_EQ(v, cplx(0.0));

    const auto f = combination({0.0, 1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2});
    const auto c = t.reconstruct(t.forward_on_rule(f, rule), rule, 10);
    for (int q = 0; q <= 10; ++q) {
      const double want = (q == 1 || q == 2) ? 1.0 / std::numbers::sqrt2 : 0.0;
      EXPECT_LT(std::abs(c[q] - want), 1e-7) << m << ' ' << q;
    }
  }
}

TEST(Reconstruct, RoundTripOnHermiteSpan) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> n01;
  for (int m = 0; m <= 4; ++m) {
    const ExtendedBargmann t({m});
    const auto rule = isometry_rule(m, 10);
    std::vector<cplx> coeffs(9);
    for (auto& v : coeffs) v = {n01(rng), n01(rng)};
    const auto c = t.reconstruct(t.forward_on_rule(combination(coeffs), rule), rule, 10);
    for (int q = 0; q <= 10; ++q) {
      const cplx want = q < 9 ? coeffs[q] : cplx(0.0);
      EXPECT_LT(std::abs(c[q] - want), 1e-7) << m << ' ' << q;
    }
  }
}

TEST(Reconstruct, Errors) {
  const ExtendedBargmann t({1});
  const auto rule = isometry_rule(1, 4);
  std::vector<cplx> values(rule.size(), cplx(1.0));
  EXPECT_THROW(t.reconstruct(values, rule, -1), DomainError);
  values.pop_back();
  EXPECT_THROW(t.reconstruct(values, rule, 4), DomainError);
  values.push_back(cplx(std::numeric_limits<double>::quiet_NaN()));
  try {
    t.reconstruct(values, rule, 4);
    FAIL() << "expected NumericError";
  } catch (const NumericError& e) {
    EXPECT_EQ(e.node(), rule.size() - 1);
  }
}

// Images of level m carry no component along level m' != m.
TEST(Reconstruct, LevelsAreSeparated) {
  for (int m = 0; m <= 4; ++m) {
    const ExtendedBargmann t({m});
    for (int mp = 0; mp <= 4; ++mp) {
      if (mp == m) continue;
      const ExtendedBargmann other({mp});
      const auto rule = isometry_rule(std::max(m, mp), 6);
      for (int q = 0; q <= 6; ++q) {
        const auto c = other.reconstruct(t.forward_on_rule(signal::hermite_signal(q), rule), rule, 6);
        for (const cplx v : c) EXPECT_LT(std::abs(v), 1e-7) << m << ' ' << mp << ' ' << q;
      }
    }
  }
}

TEST(Gram, Examples) {
  const ExtendedBargmann t0({0});
  EXPECT_LT(max_identity_defect(t0.gram_matrix(isometry_rule(0, 5), 5)), 1e-9);
  const ExtendedBargmann t3({3});
  EXPECT_LT(max_identity_defect(t3.gram_matrix(isometry_rule(3, 8), 8)), 1e-7);
}

TEST(Gram, IsometryAndHermitian) {
  for (int m = 0; m <= 6; ++m) {
    const ExtendedBargmann t({m});
    const auto g = t.gram_matrix(isometry_rule(m, 10), 10);
    EXPECT_LT(max_identity_defect(g), 1e-7) << m;
    for (int r = 0; r < g.rows(); ++r)
      for (int c = 0; c < g.cols(); ++c)
        EXPECT_LE(std::abs(g(r, c) - std::conj(g(c, r))), 1e-15) << m << ' ' << r << ' ' << c;
  }
}

TEST(Gram, ParallelMatchesSerialBitForBit) {
  const ExtendedBargmann t({2});
  const auto rule = isometry_rule(2, 10);
  const auto serial = t.gram_matrix_serial(rule, 10);
  for (const int threads : {1, 3, 8}) {
    omp_set_num_threads(threads);
    EXPECT_TRUE(t.gram_matrix(rule, 10) == serial) << threads;
  }
  EXPECT_THROW(t.gram_matrix(rule, -1), DomainError);
}

TEST(IsometryRule, Orders) {
  EXPECT_EQ(isometry_radial_order(0, 0), 3);
  EXPECT_EQ(isometry_radial_order(6, 10), 11);
  EXPECT_EQ(isometry_rule(6, 10).radial().size(), 11);
  EXPECT_EQ(isometry_rule(6, 10).angular_count(), 4 * 16 + 8);
  EXPECT_THROW(isometry_radial_order(-1, 2), DomainError);
}

TEST(SampledInput, InterpolatedSignalTransforms) {
  std::vector<signal::Sample> rows;
  for (int i = 0; i <= 800; ++i) {
    const double xi = -10.0 + 0.025 * i;
    rows.push_back({xi, orthopoly::hermite_function(0, xi)});
  }
  const signal::SampledSignal s(std::move(rows));
  const ExtendedBargmann t({0});
  for (const cplx z : random_points(10, 1.5, 9)) {
    EXPECT_LT(std::abs(t.forward(std::cref(s), z).value - 1.0), 1e-6) << z;
  }
}
