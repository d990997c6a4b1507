#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "bkappa/fock.hpp"
#include "bkappa/normal_form.hpp"
#include "bkappa/structure.hpp"
#include "generators.hpp"

using namespace bkappa;
using bkappa::testing::random_word;
using bkappa::testing::uniform;

namespace {

std::vector<Rational> rationals(std::initializer_list<std::pair<long, long>> pq) {
  std::vector<Rational> out;
  for (auto [p, q] : pq) out.emplace_back(p, q);
  return out;
}

Eigen::MatrixXd dense(FockOperator which, long d, const Rational& k) { return build_operator(which, d, k).matrix; }

}  // namespace

TEST(BuildOperator, LadderEntries) {
  const Rational k(1, 3);
  Eigen::MatrixXd up = dense(FockOperator::Raise, 8, k);
  Eigen::MatrixXd down = dense(FockOperator::Lower, 8, k);
  EXPECT_DOUBLE_EQ(up(1, 0), 1.0);
  EXPECT_DOUBLE_EQ(down(1, 2), std::sqrt(2.0 / 3.0));
  EXPECT_DOUBLE_EQ(down(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(down(0, 0), 0.0);
  EXPECT_EQ(up, down.transpose());
}

TEST(BuildOperator, FermionLimitIsNilpotent) {
  Eigen::MatrixXd up = dense(FockOperator::Raise, 6, Rational(0));
  Eigen::MatrixXd down = dense(FockOperator::Lower, 6, Rational(0));
  EXPECT_DOUBLE_EQ(up(2, 1), 0.0);
  EXPECT_DOUBLE_EQ(up(1, 0), 1.0);
  EXPECT_DOUBLE_EQ((up * up).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_DOUBLE_EQ((down * down).cwiseAbs().maxCoeff(), 0.0);
  // Nonzero block only couples |0> and |1>.
  EXPECT_DOUBLE_EQ(up.bottomRightCorner(5, 5).cwiseAbs().maxCoeff(), 0.0);
}

TEST(BuildOperator, DiagonalOperators) {
  const Rational k(2, 5);
  Eigen::MatrixXd n = dense(FockOperator::Number, 6, k);
  Eigen::MatrixXd p0 = dense(FockOperator::EvenProjector, 6, k);
  Eigen::MatrixXd p1 = dense(FockOperator::OddProjector, 6, k);
  for (long i = 0; i < 6; ++i) {
    EXPECT_DOUBLE_EQ(n(i, i), static_cast<double>(i));
    EXPECT_DOUBLE_EQ(p0(i, i), i % 2 == 0 ? 1.0 : 0.0);
  }
  EXPECT_EQ(p0 + p1, Eigen::MatrixXd::Identity(6, 6));
}

TEST(BuildOperator, Errors) {
  EXPECT_THROW(build_operator(FockOperator::Raise, 6, Rational(-1, 2)), std::domain_error);
  EXPECT_THROW(build_operator(FockOperator::Raise, 1, Rational(1, 2)), std::invalid_argument);
}

TEST(BuildOperator, AnticommutatorOnInteriorRows) {
  for (const Rational& k : rationals({{1, 3}, {1, 2}, {2, 1}, {5, 7}})) {
    const long d = 24;
    Eigen::MatrixXd up = dense(FockOperator::Raise, d, k);
    Eigen::MatrixXd down = dense(FockOperator::Lower, d, k);
    Eigen::MatrixXd lhs = down * up + up * down;
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Identity(d, d) + 2.0 * k.to_double() * dense(FockOperator::Number, d, k);
    EXPECT_LT((lhs - rhs).topLeftCorner(d - 1, d - 1).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(BuildOperator, FermionAnticommutator) {
  Eigen::MatrixXd up = dense(FockOperator::Raise, 2, Rational(0));
  Eigen::MatrixXd down = dense(FockOperator::Lower, 2, Rational(0));
  EXPECT_EQ(down * up + up * down, Eigen::MatrixXd::Identity(2, 2));
}

TEST(BuildOperator, CompositeMatchesProducts) {
  const Rational k(5, 7);
  const long d = 16;
  NormalForm nf = word_normalize(parse_word("+--+"));
  Eigen::MatrixXd up = dense(FockOperator::Raise, d, k);
  Eigen::MatrixXd down = dense(FockOperator::Lower, d, k);
  Eigen::MatrixXd product = up * down * down * up;
  Eigen::MatrixXd built = build_operator(nf, d, k).matrix;
  EXPECT_LT((built - product).topLeftCorner(d - 2, d - 2).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(ExactAction, Examples) {
  const Rational k(1, 3);
  ExactAction id = exact_action(NormalForm::identity(), 5, k);
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id.at(5).rational_part, Rational(1));
  EXPECT_EQ(id.at(5).radicand(k), Rational(1));

  ExactAction diag = exact_action(word_normalize(parse_word("+-")), 4, k);
  ASSERT_EQ(diag.size(), 1u);
  EXPECT_EQ(diag.at(4).rational_part, structure_function_value(k, 4));
  EXPECT_EQ(diag.at(4).span_lo, diag.at(4).span_hi);

  EXPECT_TRUE(exact_action(word_normalize(parse_word("+-")), 0, k).empty());
}

TEST(ExactAction, LowerRaiseRaiseAtOne) {
  const Rational k(1, 3);
  const long d = 10;
  ExactAction a = exact_action(word_normalize(parse_word("-++")), 1, k);
  Eigen::MatrixXd up = dense(FockOperator::Raise, d, k);
  Eigen::MatrixXd down = dense(FockOperator::Lower, d, k);
  Eigen::MatrixXd product = down * up * up;
  for (long m = 0; m < d; ++m) {
    double got = a.count(m) ? a.at(m).value(k) : 0.0;
    EXPECT_NEAR(got, product(m, 1), 1e-12);
  }
  ASSERT_EQ(a.size(), 1u);
  // f-(f+)^2|1> = F+(3) sqrt(F+(2))|2>
  EXPECT_EQ(a.at(2).rational_part, structure_function_value(k, 3));
  EXPECT_EQ(a.at(2).radicand(k), structure_function_value(k, 2));
}

TEST(ExactAction, RequiresPositiveKappa) {
  EXPECT_THROW(exact_action(NormalForm::identity(), 0, Rational(0)), std::domain_error);
  EXPECT_THROW(exact_action(NormalForm::identity(), -1, Rational(1)), std::invalid_argument);
}

TEST(ExactAction, AgreesWithFloatMatricesOnRandomTriples) {
  const long d = 40;
  const std::vector<Rational> kappas = rationals({{1, 3}, {1, 2}, {2, 1}, {5, 7}, {3, 2}, {1, 10}});
  for (int trial = 0; trial < 200; ++trial) {
    const Rational k = kappas[static_cast<std::size_t>(uniform(0, static_cast<long>(kappas.size()) - 1))];
    const auto word = random_word(8);
    const long n = uniform(0, 20);
    NormalForm nf = word_normalize(word);
    Eigen::MatrixXd up = dense(FockOperator::Raise, d, k);
    Eigen::MatrixXd down = dense(FockOperator::Lower, d, k);
    Eigen::VectorXd v = Eigen::VectorXd::Unit(d, n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = (*it == Generator::Raise ? up : down) * v;
    ExactAction a = exact_action(nf, n, k);
    for (long m = 0; m < d; ++m) {
      const double got = a.count(m) ? a.at(m).value(k) : 0.0;
      ASSERT_NEAR(got, v(m), 1e-10 * std::max(1.0, std::abs(v(m)))) << word_to_string(word) << " n=" << n;
    }
  }
}

TEST(ExactAction, SharedRadicandAcrossMonomials) {
  const Rational k(2, 3);
  NormalForm nf = word_normalize(parse_word("+-+")) + word_normalize(parse_word("++-")) +
                  NormalForm::generator(Generator::Raise);
  for (long n = 0; n < 10; ++n) {
    ExactAction a = exact_action(nf, n, k);
    for (const auto& [m, coeff] : a) {
      EXPECT_EQ(coeff.span_lo, std::min(n, m));
      EXPECT_EQ(coeff.span_hi, std::max(n, m));
    }
  }
}

TEST(Bosonic, CommutatorOnInteriorStates) {
  for (const Rational& k : rationals({{1, 3}, {2, 1}})) {
    const long d = 24;
    Eigen::MatrixXd up = dense(FockOperator::Raise, d, k);
    Eigen::MatrixXd down = dense(FockOperator::Lower, d, k);
    Eigen::MatrixXd xp = up * up, xm = down * down;
    Eigen::MatrixXd comm = xm * xp - xp * xm;
    const double kd = k.to_double();
    for (long i = 0; i < d - 2; ++i) {
      for (long j = 0; j < d - 2; ++j) {
        const double expected = i == j ? 2.0 * kd * (2.0 * kd * i + 1.0) : 0.0;
        EXPECT_NEAR(comm(i, j), expected, 1e-10);
      }
    }
  }
}

TEST(Bosonic, RescaledGeneratorsSatisfyDeformedOscillator) {
  const Rational k(1, 3);
  const double kd = k.to_double();
  const long d = 24;
  Eigen::MatrixXd up = dense(FockOperator::Raise, d, k);
  Eigen::MatrixXd down = dense(FockOperator::Lower, d, k);
  Eigen::MatrixXd n = dense(FockOperator::Number, d, k);
  const double scale = 1.0 / std::sqrt(2.0 * kd);
  Eigen::MatrixXd ap = scale * up * up, am = scale * down * down;
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
  const long inner = d - 2;
  EXPECT_LT(((am * ap - ap * am) - (2.0 * kd * n + id)).topLeftCorner(inner, inner).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT(((n * ap - ap * n) - 2.0 * ap).topLeftCorner(inner, inner).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT(((n * am - am * n) + 2.0 * am).topLeftCorner(inner, inner).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Spectrum, Examples) {
  EXPECT_EQ(algebraic_spectrum(SpectrumOperator::PlusMinus, Rational(4, 5), 6),
            rationals({{0, 1}, {1, 1}, {8, 5}, {13, 5}, {16, 5}, {21, 5}}));
  EXPECT_EQ(algebraic_spectrum(SpectrumOperator::MinusPlus, Rational(4, 5), 5),
            rationals({{1, 1}, {8, 5}, {13, 5}, {16, 5}, {21, 5}}));
  EXPECT_EQ(algebraic_spectrum(SpectrumOperator::PlusMinus, Rational(0), 6),
            rationals({{0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}}));
  EXPECT_THROW(algebraic_spectrum(SpectrumOperator::PlusMinus, Rational(1), 0), std::invalid_argument);
}

TEST(Spectrum, MatchesMatrixDiagonal) {
  const Rational k(4, 5);
  Eigen::MatrixXd up = dense(FockOperator::Raise, 10, k);
  Eigen::MatrixXd down = dense(FockOperator::Lower, 10, k);
  Eigen::MatrixXd pm = up * down;
  auto spec = algebraic_spectrum(SpectrumOperator::PlusMinus, k, 10);
  for (long i = 0; i < 10; ++i) EXPECT_NEAR(pm(i, i), spec[static_cast<std::size_t>(i)].to_double(), 1e-12);
}

TEST(Gaps, Examples) {
  EXPECT_EQ(gap_analysis(algebraic_spectrum(SpectrumOperator::PlusMinus, Rational(4, 5), 6)),
            rationals({{1, 1}, {3, 5}, {1, 1}, {3, 5}, {1, 1}}));
  EXPECT_EQ(gap_analysis(algebraic_spectrum(SpectrumOperator::PlusMinus, Rational(1, 2), 6)),
            rationals({{1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}}));
  auto fermion = gap_analysis(algebraic_spectrum(SpectrumOperator::PlusMinus, Rational(0), 6));
  EXPECT_EQ(std::count(fermion.begin(), fermion.end(), Rational(1)), 1);
  EXPECT_EQ(std::count(fermion.begin(), fermion.end(), Rational(0)), 4);
  EXPECT_TRUE(gap_analysis({Rational(3)}).empty());
}

TEST(Isospectral, Examples) {
  for (const Rational& k : rationals({{1, 3}, {2, 1}})) {
    for (long d : {12L, 24L}) {
      IsospectralReport r = isospectral_check(k, d);
      EXPECT_TRUE(r.holds);
      EXPECT_FALSE(r.fermion_case);
      EXPECT_EQ(static_cast<long>(r.minus_plus.size()), d - 2);
      EXPECT_EQ(r.plus_minus, r.minus_plus);
    }
  }
  IsospectralReport f = isospectral_check(Rational(0), 2);
  EXPECT_TRUE(f.holds);
  EXPECT_TRUE(f.fermion_case);
}

TEST(Isospectral, Errors) {
  EXPECT_THROW(isospectral_check(Rational(1, 3), 5), std::invalid_argument);
  EXPECT_THROW(isospectral_check(Rational(1, 3), 2), std::invalid_argument);
  EXPECT_THROW(isospectral_check(Rational(-1, 3), 8), std::domain_error);
}
