#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "polyfock/errors.hpp"
#include "polyfock/orthopoly.hpp"
#include "polyfock/quadrature.hpp"

using namespace polyfock;
using namespace polyfock::orthopoly;

TEST(Hermite, LowDegrees) {
  EXPECT_EQ(hermite(0, 3.7), 1.0);
  EXPECT_EQ(hermite(1, 0.5), 1.0);
  EXPECT_EQ(hermite(2, 1.0), 2.0);
  EXPECT_DOUBLE_EQ(oracle::eval(oracle::hermite_rodriguez(2), 1.0), 2.0);
}

TEST(Hermite, RejectsDegreeOverCap) {
  EXPECT_THROW(hermite(kDegreeCap + 1, 0.0), DomainError);
  EXPECT_THROW(hermite(-1, 0.0), DomainError);
  EXPECT_NO_THROW(hermite(kDegreeCap, 0.1));
}

// Relative error against the exact rational value.
double poly_error(const oracle::Poly& p, double x, double got) {
  const double e = oracle::eval(p, x);
  return std::abs(got - e) / std::abs(e);
}

TEST(Hermite, RecurrenceMatchesRodriguez) {
  for (int n = 0; n <= 12; ++n) {
    const auto exact = oracle::hermite_rodriguez(n);
    for (double x = -5.0; x <= 5.0; x += 0.37) {
      EXPECT_LT(poly_error(exact, x, hermite(n, x)), 1e-12) << "n=" << n << " x=" << x;
    }
  }
}

TEST(Laguerre, Examples) {
  EXPECT_EQ(laguerre(0, 2.5, 7.0), 1.0);
  EXPECT_EQ(laguerre(1, 0.0, 2.0), -1.0);
  EXPECT_DOUBLE_EQ(laguerre(2, -1.0, 1.0), -0.5);
}

TEST(Laguerre, RecurrenceMatchesRodriguez) {
  for (int a = 0; a <= 3; ++a) {
    for (int n = 0; n <= 12; ++n) {
      const auto exact = oracle::laguerre_rodriguez(n, a);
      for (double t = 0.0; t <= 5.0; t += 0.23) {
        EXPECT_LT(poly_error(exact, t, laguerre(n, a, t)), 1e-12) << "n=" << n << " a=" << a << " t=" << t;
      }
    }
  }
}

TEST(Laguerre, NegativeOrderRules) {
  EXPECT_THROW(laguerre(2, -3.0, 1.0), DomainError);   // k > n
  EXPECT_THROW(laguerre(4, -1.5, 1.0), DomainError);   // non-integer below -1
  EXPECT_NO_THROW(laguerre(4, -0.5, 1.0));             // alpha > -1 is ordinary
  EXPECT_THROW(laguerre(kDegreeCap + 1, 0.0, 1.0), DomainError);
}

// The negative-order reduction against the generalized-binomial power series,
// an evaluation route that never touches the reduction.
TEST(Laguerre, NegativeOrderAgreesWithPowerSeries) {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (double t = 0.1; t <= 10.0; t += 0.45) {
        const double a = laguerre(n, -k, t);
        const double b = laguerre_power_sum(n, -k, t);
        EXPECT_NEAR(a, b, 1e-10 * std::max(1.0, std::abs(b))) << n << ' ' << k << ' ' << t;
      }
    }
  }
}

TEST(Laguerre, CoefficientsVanishBelowNegativeOrder) {
  for (int i = 0; i < 3; ++i) EXPECT_EQ(laguerre_coefficient(5, -3.0, i), 0.0);
  EXPECT_NE(laguerre_coefficient(5, -3.0, 3), 0.0);
  EXPECT_EQ(laguerre_coefficient(5, 0.0, 6), 0.0);
}

TEST(Hyp1f1, Examples) {
  EXPECT_EQ(hyp1f1(-3, 2.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(hyp1f1(-1, 2.0, 4.0), -1.0);
  // 1F1(-2; 1; 1) = 2! Gamma(1) / Gamma(3) * L_2(1) = L_2(1) = -1/2
  EXPECT_NEAR(hyp1f1(-2, 1.0, 1.0), 2.0 * 1.0 / 2.0 * laguerre(2, 0.0, 1.0), 1e-15);
  EXPECT_NEAR(hyp1f1(-2, 1.0, 1.0), -0.5, 1e-15);
}

TEST(Hyp1f1, NonTerminatingSeries) {
  EXPECT_NEAR(hyp1f1(1.0, 1.0, 2.0), std::exp(2.0), 1e-14 * std::exp(2.0));
  // 1F1(1; 2; u) = (e^u - 1) / u
  EXPECT_NEAR(hyp1f1(1.0, 2.0, 3.0), std::expm1(3.0) / 3.0, 1e-14 * 7.0);
}

TEST(Hyp1f1, Errors) {
  EXPECT_THROW(hyp1f1(1.0, 0.0, 1.0), DomainError);
  EXPECT_THROW(hyp1f1(1.0, -2.0, 1.0), DomainError);
  EXPECT_THROW(hyp1f1(1.0, 1e9, 1e9), ConvergenceError);   // terms stay ~1 past the cap
  EXPECT_THROW(hyp1f1(0.5, 1.5, -2e5), ConvergenceError);  // partial sums overflow
}

TEST(Hyp1f1, LaguerreBridge) {
  for (int n = 0; n <= 10; ++n) {
    for (int a = 0; a <= 3; ++a) {
      const double scale = std::exp(std::lgamma(n + a + 1.0) - log_factorial(n) - std::lgamma(a + 1.0));
      for (double u = 0.0; u <= 10.0; u += 0.5) {
        const double lag = laguerre(n, a, u);
        const double bridge = hyp1f1(-n, a + 1.0, u) * scale;
        // exact roots (e.g. L_1(1) = 0) get a 1e-15 absolute allowance
        EXPECT_LE(std::abs(bridge - lag), 1e-10 * std::abs(lag) + 1e-15) << n << ' ' << a << ' ' << u;
      }
    }
  }
}

TEST(HermiteFunction, Examples) {
  EXPECT_NEAR(hermite_function(0, 0.0), 0.7511255444649425, 1e-16);
  EXPECT_NEAR(hermite_function(0, 0.0), std::pow(std::numbers::pi, -0.25), 1e-16);
  EXPECT_EQ(hermite_function(1, 0.0), 0.0);
  EXPECT_THROW(hermite_function(kDegreeCap + 1, 0.0), DomainError);
}

TEST(HermiteFunction, MatchesDefinitionForModerateDegree) {
  for (int p = 0; p <= 20; ++p) {
    const auto h = oracle::hermite_rodriguez(p);
    for (double x = -4.0; x <= 4.0; x += 0.5) {
      const double norm = std::pow(std::numbers::pi, -0.25) / std::sqrt(std::ldexp(1.0, p) * std::tgamma(p + 1.0));
      const double want = norm * std::exp(-0.5 * x * x) * oracle::eval(h, x);
      EXPECT_NEAR(hermite_function(p, x), want, 1e-13 * std::max(1.0, std::abs(want))) << p << ' ' << x;
    }
  }
}

TEST(HermiteFunction, FiniteForHighDegreeAndLargeArgument) {
  // 2^p p! overflows a double long before p = 500
  for (const double x : {0.0, 5.0, 30.0, 40.0}) {
    const double v = hermite_function(500, x);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_LT(std::abs(v), 1.0);
  }
  const auto row = hermite_functions(500, 12.0);
  EXPECT_EQ(row.back(), hermite_function(500, 12.0));
}

TEST(HermiteFunction, Orthonormality) {
  const auto rule = quadrature::gauss_hermite(64);
  double worst = 0.0;
  for (int p = 0; p <= 30; ++p) {
    for (int q = 0; q <= 30; ++q) {
      const auto f = [p](double x) { return std::complex<double>(hermite_function(p, x)); };
      const auto g = [q](double x) { return std::complex<double>(hermite_function(q, x)); };
      worst = std::max(worst, std::abs(quadrature::line_inner(f, g, rule) - (p == q ? 1.0 : 0.0)));
    }
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(LogFactorial, Values) {
  EXPECT_EQ(log_factorial(0), 0.0);
  EXPECT_EQ(log_factorial(1), 0.0);
  EXPECT_NEAR(log_factorial(10), std::log(3628800.0), 1e-14 * std::log(3628800.0));
  for (const int n : {20, 50, 170, 1000, 4096, 5000}) {
    const double exact = std::lgamma(n + 1.0);
    EXPECT_NEAR(log_factorial(n), exact, 1e-14 * exact) << n;
  }
  // exact integer product, compared through its logarithm
  const oracle::BigInt f = oracle::factorial(30);
  EXPECT_NEAR(log_factorial(30), std::log(f.convert_to<double>()), 1e-14 * 75.0);
  EXPECT_THROW(log_factorial(-1), DomainError);
}
