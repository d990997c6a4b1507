#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "bkappa/bargmann.hpp"
#include "bkappa/coherent.hpp"
#include "bkappa/grassmann.hpp"
#include "bkappa/structure.hpp"
#include "generators.hpp"

using namespace bkappa;
using bkappa::testing::random_rational;
using bkappa::testing::uniform;

namespace {

double f_plus(const Rational& k, long n) { return structure_function_value(k, n).to_double(); }

ExactPoly random_exact_poly(long degree) {
  ExactPoly p;
  for (long i = 0; i <= degree; ++i) p.coeffs.push_back(random_rational());
  return p;
}

double max_diff(const BargmannPoly& a, const BargmannPoly& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) m = std::max(m, std::abs(a.coefficient(i) - b.coefficient(i)));
  return m;
}

}  // namespace

TEST(Coherent, VacuumAtZero) {
  CoherentState s = coherent_state(Rational(1, 2), Complex(0.0, 0.0));
  ASSERT_FALSE(s.coefficients.empty());
  EXPECT_EQ(s.coefficients[0], Complex(1.0, 0.0));
  for (std::size_t i = 1; i < s.coefficients.size(); ++i) EXPECT_EQ(s.coefficients[i], Complex(0.0, 0.0));
  EXPECT_DOUBLE_EQ(s.norm_sq, 1.0);
}

TEST(Coherent, ResidualAtHalf) {
  CoherentState s = coherent_state(Rational(1, 2), Complex(0.7, 0.3), 1e-24);
  EXPECT_LE(coherent_residual(s), 1e-10);
  EXPECT_LE(recurrence_violation(s), 1e-12);
  EXPECT_NEAR(s.norm_sq, 1.0, 1e-12);
}

TEST(Coherent, SecondCoefficient) {
  for (const Rational& k : {Rational(1, 2), Rational(1, 3), Rational(2)}) {
    const Complex z(0.4, -0.9);
    CoherentState s = coherent_state(k, z);
    ASSERT_GE(s.coefficients.size(), 3u);
    const Complex expected = z * z * s.coefficients[0] / std::sqrt(2.0 * k.to_double());
    EXPECT_LT(std::abs(s.coefficients[2] - expected), 1e-14);
  }
}

TEST(Coherent, MatchesClosedFormUpToGlobalConstant) {
  const Rational k(3, 4);
  const Complex z(1.1, 0.5);
  CoherentState s = coherent_state(k, z);
  const Complex scale = s.coefficients[0] / closed_form_coefficient(k, z, 0);
  for (std::size_t n = 0; n < 40 && n < s.coefficients.size(); ++n) {
    const Complex cf = scale * closed_form_coefficient(k, z, static_cast<long>(n));
    EXPECT_LT(std::abs(s.coefficients[n] - cf), 1e-12 * std::max(1.0, std::abs(cf))) << n;
  }
}

TEST(Coherent, RandomStatesAreEigenvectors) {
  for (int i = 0; i < 20; ++i) {
    const Rational k(uniform(5, 300), 100);
    const double r = 2.0 * static_cast<double>(uniform(0, 1000)) / 1000.0;
    const double phi = 6.283185307179586 * static_cast<double>(uniform(0, 1000)) / 1000.0;
    CoherentState s = coherent_state(k, std::polar(r, phi), 1e-24);
    EXPECT_LE(coherent_residual(s), 1e-10) << k.str() << " |z|=" << r;
    EXPECT_NEAR(s.norm_sq, 1.0, 1e-12);
  }
}

TEST(Coherent, Errors) {
  EXPECT_THROW(coherent_state(Rational(0), Complex(1.0, 0.0)), std::domain_error);
  EXPECT_THROW(coherent_state(Rational(-1, 2), Complex(1.0, 0.0)), std::domain_error);
  EXPECT_THROW(coherent_state(Rational(1, 2), Complex(1.0, 0.0), 0.0), std::invalid_argument);
}

TEST(EKappa, AtZero) {
  for (const Rational& k : {Rational(1, 2), Rational(1, 3), Rational(2)}) {
    EXPECT_NEAR(e_kappa(k, 0.0), 1.0 / std::tgamma(1.0 / (2.0 * k.to_double())), 1e-14);
  }
}

TEST(EKappa, DirectSeriesAtHalf) {
  // sum (n + 2) / (n! (n + 1)!)
  double direct = 0.0, fact_n = 1.0;
  for (int n = 0; n < 40; ++n) {
    if (n > 0) fact_n *= n;
    direct += (n + 2.0) / (fact_n * fact_n * (n + 1.0));
  }
  EXPECT_NEAR(e_kappa(Rational(1, 2), 1.0), direct, 1e-12 * direct);
}

TEST(EKappa, EqualsUnnormalizedCoefficientSum) {
  for (const Rational& k : {Rational(1, 2), Rational(1, 5), Rational(7, 4)}) {
    const Complex z(0.8, 0.6);
    CoherentState s = coherent_state(k, z);
    const double a = 1.0 / (2.0 * k.to_double());
    const double x = std::norm(z) / (2.0 * k.to_double());
    const double expected = std::tgamma(a) * e_kappa(k, x);
    EXPECT_NEAR(s.unnormalized_sum, expected, 1e-12 * expected);
    // Term by term: pair (c_{2n}, c_{2n+1}) with c_0 = 1 contributes Gamma(a) times the n-th series term.
    for (long n = 0; n < 10; ++n) {
      const Complex c0 = closed_form_coefficient(k, z, 2 * n) / closed_form_coefficient(k, z, 0);
      const Complex c1 = closed_form_coefficient(k, z, 2 * n + 1) / closed_form_coefficient(k, z, 0);
      const double pair = std::norm(c0) + std::norm(c1);
      const double term = std::tgamma(a) * e_kappa_term(k, x, n);
      EXPECT_NEAR(pair, term, 1e-12 * std::max(1.0, term)) << n;
    }
  }
}

TEST(Bargmann, LowMonomials) {
  const Rational k(1, 3);
  const double a = 1.0 / (2.0 * k.to_double());
  BargmannPoly f0 = bargmann_monomial(k, 0);
  BargmannPoly f1 = bargmann_monomial(k, 1);
  ASSERT_EQ(f0.size(), 1u);
  EXPECT_NEAR(f0.coeffs[0].real(), 1.0 / std::sqrt(std::tgamma(a)), 1e-14);
  ASSERT_EQ(f1.size(), 2u);
  EXPECT_EQ(f1.coeffs[0], Complex(0.0, 0.0));
  EXPECT_NEAR(f1.coeffs[1].real(), 1.0 / std::sqrt(2.0 * k.to_double() * std::tgamma(a + 1.0)), 1e-14);
  // z f1 = sqrt(F+(2)) f2
  BargmannPoly f2 = bargmann_monomial(k, 2);
  EXPECT_LT(max_diff(multiply_by_z(f1), std::sqrt(f_plus(k, 2)) * f2), 1e-14);
}

TEST(Bargmann, FibonacciDifference) {
  ExactPoly z{{Rational(0), Rational(1)}};
  ExactPoly z2{{Rational(0), Rational(0), Rational(1)}};
  EXPECT_EQ(fibonacci_difference(z), ExactPoly{{Rational(1)}});
  EXPECT_EQ(fibonacci_difference(z2), ExactPoly{});
  for (int i = 0; i < 20; ++i) {
    ExactPoly p = random_exact_poly(uniform(0, 50));
    EXPECT_EQ(fibonacci_difference(multiply_by_z(p)) + multiply_by_z(fibonacci_difference(p)), p);
    EXPECT_EQ(fibonacci_difference(fibonacci_difference(p)), ExactPoly{});
  }
}

TEST(Bargmann, GeneralizedDerivativeExamples) {
  for (const Rational& k : {Rational(1, 3), Rational(2), Rational(5, 7)}) {
    ExactPoly z2{{Rational(0), Rational(0), Rational(1)}};
    ExactPoly z3{{Rational(0), Rational(0), Rational(0), Rational(1)}};
    EXPECT_EQ(generalized_derivative(k, z2), (ExactPoly{{Rational(0), Rational(2) * k}}));
    EXPECT_EQ(generalized_derivative(k, z3), (ExactPoly{{Rational(0), Rational(0), Rational(1) + Rational(2) * k}}));
  }
}

TEST(Bargmann, ExactAnticommutators) {
  for (const Rational& k : {Rational(1, 3), Rational(1, 2), Rational(2), Rational(5, 7)}) {
    for (int i = 0; i < 10; ++i) {
      ExactPoly p = random_exact_poly(uniform(0, 30));
      ExactPoly lhs = generalized_derivative(k, multiply_by_z(p)) + multiply_by_z(generalized_derivative(k, p));
      EXPECT_EQ(lhs, p + (Rational(2) * k) * euler_operator(p));
      EXPECT_EQ(generalized_derivative(k, p), structure_realization(k, p));
    }
  }
}

TEST(Bargmann, FloatAnticommutatorUpToDegreeFifty) {
  const Rational k(3, 7);
  BargmannPoly p;
  for (int i = 0; i <= 50; ++i) p.coeffs.emplace_back(std::cos(i), std::sin(0.5 * i));
  BargmannPoly lhs = generalized_derivative(k, multiply_by_z(p)) + multiply_by_z(generalized_derivative(k, p));
  BargmannPoly rhs = p + Complex(2.0 * k.to_double(), 0.0) * euler_operator(p);
  EXPECT_LT(max_diff(lhs, rhs), 1e-10);
}

TEST(Bargmann, LadderActionsOnNormalizedMonomials) {
  for (const Rational& k : {Rational(1, 3), Rational(2)}) {
    for (long n = 0; n <= 60; ++n) {
      BargmannPoly fn = bargmann_monomial(k, n);
      BargmannPoly up = bargmann_monomial(k, n + 1);
      EXPECT_LT(max_diff(multiply_by_z(fn), std::sqrt(f_plus(k, n + 1)) * up), 1e-12 * (1.0 + std::abs(up.coeffs.back())));
      if (n > 0) {
        BargmannPoly down = bargmann_monomial(k, n - 1);
        EXPECT_LT(max_diff(generalized_derivative(k, fn), std::sqrt(f_plus(k, n)) * down),
                  1e-12 * (1.0 + std::abs(down.coeffs.back())));
      } else {
        EXPECT_LT(max_diff(generalized_derivative(k, fn), BargmannPoly{}), 1e-15);
      }
    }
  }
}

TEST(Bargmann, TransformIntertwinesLadders) {
  const Rational k(2, 5);
  std::vector<Complex> psi;
  for (int i = 0; i < 12; ++i) psi.emplace_back(0.1 * i - 0.4, 0.05 * i * i);
  BargmannPoly t = bargmann_transform(psi, k);
  EXPECT_LT(max_diff(bargmann_transform(std::vector<Complex>{1.0}, k), bargmann_monomial(k, 0)), 1e-15);

  std::vector<Complex> raised(psi.size() + 1), lowered(psi.size() - 1), flipped(psi);
  for (std::size_t n = 0; n < psi.size(); ++n) {
    raised[n + 1] = std::sqrt(f_plus(k, static_cast<long>(n) + 1)) * psi[n];
    if (n > 0) lowered[n - 1] = std::sqrt(f_plus(k, static_cast<long>(n))) * psi[n];
    if (n % 2 == 1) flipped[n] = -psi[n];
  }
  EXPECT_LT(max_diff(bargmann_transform(raised, k), multiply_by_z(t)), 1e-12);
  EXPECT_LT(max_diff(bargmann_transform(lowered, k), generalized_derivative(k, t)), 1e-12);
  EXPECT_LT(max_diff(bargmann_transform(flipped, k), parity_flip(t)), 1e-15);
}

TEST(Bargmann, RaisingEvenMonomial) {
  const Rational k(1, 3);
  for (long n = 0; n < 10; ++n) {
    std::vector<Complex> e(2 * n + 2);
    e[2 * n + 1] = std::sqrt(1.0 + 2.0 * k.to_double() * n);
    EXPECT_LT(max_diff(multiply_by_z(bargmann_monomial(k, 2 * n)), bargmann_transform(e, k)), 1e-12);
  }
}

TEST(Bargmann, EulerOperatorCountsDegree) {
  BargmannPoly f5 = bargmann_monomial(Rational(1, 3), 5);
  EXPECT_LT(max_diff(euler_operator(f5), Complex(5.0, 0.0) * f5), 1e-15);
}

TEST(Grassmann, Algebra) {
  GrassmannElement t = GrassmannElement::theta(), tb = GrassmannElement::theta_bar();
  EXPECT_TRUE((t * t).is_zero());
  EXPECT_TRUE((tb * tb).is_zero());
  EXPECT_EQ(t * tb, GrassmannElement(0.0, 0.0, 0.0, 1.0));
  EXPECT_EQ(tb * t, GrassmannElement(0.0) - t * tb);
  EXPECT_EQ(t.conjugate(), tb);
  GrassmannElement x(0.0, 0.0, 0.0, 2.0);
  GrassmannElement inv = inverse_sqrt_one_plus(x);
  EXPECT_EQ(inv * inv * (GrassmannElement(1.0) + x), GrassmannElement(1.0));
}

TEST(Grassmann, CoherentStateWithTheta) {
  GrassmannReport r = grassmann_coherent(GrassmannElement::theta());
  EXPECT_TRUE(r.eigen_equation);
  EXPECT_TRUE(r.normalization);
  EXPECT_TRUE(r.difference_nilpotent);
  EXPECT_TRUE(r.derivative_reduces);
  GrassmannReport scaled = grassmann_coherent(GrassmannElement::theta({0.3, -1.2}));
  EXPECT_TRUE(scaled.eigen_equation && scaled.normalization);
}

TEST(Grassmann, ZeroLabelIsVacuum) {
  GrassmannReport r = grassmann_coherent(GrassmannElement());
  EXPECT_TRUE(r.eigen_equation);
  EXPECT_EQ(r.state[0], GrassmannElement(1.0));
  EXPECT_TRUE(r.state[1].is_zero());
}

TEST(Grassmann, RejectsEvenLabels) {
  EXPECT_THROW(grassmann_coherent(GrassmannElement(1.0, 1.0)), std::invalid_argument);
  EXPECT_THROW(grassmann_coherent(GrassmannElement(0.0, 0.0, 0.0, 1.0)), std::invalid_argument);
}
