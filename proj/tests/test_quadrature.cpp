#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "polyfock/errors.hpp"
#include "polyfock/orthopoly.hpp"
#include "polyfock/quadrature.hpp"

using namespace polyfock;
using namespace polyfock::quadrature;
using cplx = std::complex<double>;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

double hermite_moment(const QuadratureRule& r, int k) {
  double s = 0.0;
  for (int i = 0; i < r.size(); ++i) s += r.weights()[i] * std::pow(r.nodes()[i], k);
  return s;
}

cplx psi(int p, double x) { return orthopoly::hermite_function(p, x); }

}  // namespace

TEST(GaussHermite, SmallRules) {
  const auto r1 = gauss_hermite(1);
  ASSERT_EQ(r1.size(), 1);
  EXPECT_EQ(r1.nodes()[0], 0.0);
  EXPECT_NEAR(r1.weights()[0], kSqrtPi, 1e-15);

  const auto r2 = gauss_hermite(2);
  EXPECT_NEAR(r2.nodes()[0], -1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(r2.nodes()[1], 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(r2.weights()[0], kSqrtPi / 2, 1e-15);
  EXPECT_NEAR(r2.weights()[1], kSqrtPi / 2, 1e-15);

  EXPECT_NEAR(hermite_moment(gauss_hermite(3), 4), 0.75 * kSqrtPi, 1e-14);
}

TEST(GaussHermite, Bounds) {
  EXPECT_THROW(gauss_hermite(0), DomainError);
  EXPECT_THROW(gauss_hermite(kMaxHermiteNodes + 1), DomainError);
  EXPECT_NO_THROW(gauss_hermite(kMaxHermiteNodes));
}

TEST(GaussHermite, DegreeExactnessAndFirstFailure) {
  for (const int n : {2, 3, 5, 8, 12, 16}) {
    const auto r = gauss_hermite(n);
    for (int k = 0; 2 * k <= 2 * n - 1; ++k) {
      const double exact = oracle::gaussian_moment(2 * k).convert_to<double>() * kSqrtPi;
      EXPECT_LT(std::abs(hermite_moment(r, 2 * k) - exact), 1e-13 * exact) << n << ' ' << 2 * k;
    }
    // degree 2n is the first even moment the rule cannot integrate
    const double exact = oracle::gaussian_moment(2 * n).convert_to<double>() * kSqrtPi;
    EXPECT_GT(std::abs(hermite_moment(r, 2 * n) - exact), 1e-6 * exact) << n;
  }
}

TEST(GaussHermite, SymmetricPositiveAndNormalized) {
  for (const int n : {1, 2, 7, 32, 64, 128, 256}) {
    const auto r = gauss_hermite(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      EXPECT_GT(r.weights()[i], 0.0);
      EXPECT_NEAR(r.nodes()[i], -r.nodes()[n - 1 - i], 1e-14);
      if (i > 0) {
        EXPECT_LT(r.nodes()[i - 1], r.nodes()[i]);
      }
      sum += r.weights()[i];
    }
    EXPECT_NEAR(sum, kSqrtPi, 1e-13) << n;
  }
}

TEST(GaussLaguerre, WeightsSumToOneAndMomentsAreFactorials) {
  for (const int n : {1, 2, 5, 20, 80, 150, kMaxLaguerreNodes}) {
    const auto r = gauss_laguerre(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      EXPECT_GT(r.weights()[i], 0.0);
      EXPECT_GT(r.nodes()[i], 0.0);
      sum += r.weights()[i];
    }
    EXPECT_NEAR(sum, 1.0, 1e-13) << n;
  }
  const auto r = gauss_laguerre(10);
  for (int k = 0; k <= 19; ++k) {
    double s = 0.0;
    for (int i = 0; i < r.size(); ++i) s += r.weights()[i] * std::pow(r.nodes()[i], k);
    const double exact = oracle::factorial(k).convert_to<double>();
    EXPECT_LT(std::abs(s - exact), 1e-12 * exact) << k;
  }
  EXPECT_THROW(gauss_laguerre(0), DomainError);
  EXPECT_THROW(gauss_laguerre(kMaxLaguerreNodes + 1), DomainError);
}

TEST(QuadratureRule, ValidatesInput) {
  EXPECT_THROW(QuadratureRule({}, {}, WeightKind::GaussHermite), ConstructionError);
  EXPECT_THROW(QuadratureRule({0.0, 1.0}, {1.0}, WeightKind::GaussHermite), ConstructionError);
  EXPECT_THROW(QuadratureRule({0.0, 1.0}, {1.0, 0.0}, WeightKind::GaussHermite), ConstructionError);
  EXPECT_THROW(QuadratureRule({1.0, 0.0}, {1.0, 1.0}, WeightKind::GaussHermite), ConstructionError);
}

TEST(LineInner, Examples) {
  const auto r32 = gauss_hermite(32);
  const auto f0 = [](double x) { return psi(0, x); };
  EXPECT_NEAR(std::abs(line_inner(f0, f0, r32) - 1.0), 0.0, 1e-12);
  const auto f3 = [](double x) { return psi(3, x); };
  const auto f5 = [](double x) { return psi(5, x); };
  EXPECT_LT(std::abs(line_inner(f3, f5, r32)), 1e-12);
  // one node sits at the root of psi_1: the answer is 0 instead of 1
  const auto f1 = [](double x) { return psi(1, x); };
  EXPECT_GT(std::abs(line_inner(f1, f1, gauss_hermite(1)) - 1.0), 0.5);
}

TEST(LineInner, LinearFirstConjugateLinearSecond) {
  const auto r = gauss_hermite(32);
  const cplx a(0.3, -1.2);
  const auto f = [&](double x) { return a * psi(2, x); };
  const auto g = [&](double x) { return psi(2, x); };
  EXPECT_LT(std::abs(line_inner(f, g, r) - a), 1e-13);
  EXPECT_LT(std::abs(line_inner(g, f, r) - std::conj(a)), 1e-13);
}

TEST(LineInner, NonFiniteIntegrandReportsNode) {
  const auto r = gauss_hermite(8);
  const double bad_x = r.nodes()[5];
  const auto f = [&](double x) { return x == bad_x ? cplx(std::numeric_limits<double>::quiet_NaN()) : cplx(1.0); };
  const auto g = [](double) { return cplx(1.0); };
  try {
    line_inner(f, g, r);
    FAIL() << "expected NumericError";
  } catch (const NumericError& e) {
    EXPECT_EQ(e.node(), 5u);
  }
  std::vector<cplx> short_values(3);
  EXPECT_THROW(line_inner(short_values, short_values, r), DomainError);
}

TEST(PlanarRule, LayoutAndValidation) {
  const PlanarRule rule(gauss_laguerre(4), 6);
  EXPECT_EQ(rule.size(), 24u);
  const double t1 = rule.radial().nodes()[1];
  const cplx z = rule.node(1 * 6 + 2);
  EXPECT_NEAR(std::abs(z), std::sqrt(t1), 1e-15);
  EXPECT_NEAR(std::arg(z), 2.0 * std::numbers::pi * 2 / 6, 1e-15);
  EXPECT_DOUBLE_EQ(rule.weight(1 * 6 + 2), rule.radial().weights()[1] / 6);
  EXPECT_DOUBLE_EQ(rule.max_radius(), std::sqrt(rule.radial().nodes().back()));
  EXPECT_THROW(PlanarRule(gauss_hermite(4), 6), DomainError);
  EXPECT_THROW(PlanarRule(gauss_laguerre(4), 0), DomainError);
  EXPECT_EQ(PlanarRule::for_max_index(5).angular_count(), 28);
  EXPECT_EQ(PlanarRule::for_max_index(5).radial().size(), kDefaultRadialOrder);
}

TEST(PlanarInner, Examples) {
  const auto rule = PlanarRule::for_max_index(4);
  const auto one = [](cplx) { return cplx(1.0); };
  EXPECT_NEAR(std::abs(planar_inner(one, one, rule) - 1.0), 0.0, 1e-13);
  const auto z = [](cplx w) { return w; };
  EXPECT_NEAR(std::abs(planar_inner(z, z, rule) - 1.0), 0.0, 1e-13);
  const auto z2 = [](cplx w) { return w * w; };
  const auto zb2 = [](cplx w) { return std::conj(w * w); };
  EXPECT_LT(std::abs(planar_inner(z2, zb2, rule)), 1e-13);
}

// <z^a zbar^b, z^c zbar^d>_mu = delta_{a-b, c-d} (s)! with s = (a+b+c+d)/2,
// from the radial moments int t^s e^{-t} dt = s!. Errors are measured against
// ||f|| ||g|| = sqrt((a+b)! (c+d)!), the natural size of the pairing.
TEST(PlanarInner, MonomialExactness) {
  const auto rule = PlanarRule::for_max_index(12);
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c)
        for (int d = 0; d <= 6; ++d) {
          const auto f = [a, b](cplx w) { return std::pow(w, a) * std::pow(std::conj(w), b); };
          const auto g = [c, d](cplx w) { return std::pow(w, c) * std::pow(std::conj(w), d); };
          const cplx got = planar_inner(f, g, rule);
          double want = 0.0;
          if (a - b == c - d) want = oracle::factorial((a + b + c + d) / 2).convert_to<double>();
          const double size = std::sqrt((oracle::factorial(a + b) * oracle::factorial(c + d)).convert_to<double>());
          const double err = std::abs(got - want) / size;
          ASSERT_LT(err, 1e-12) << a << b << c << d;
        }
}
