#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bkappa/normal_form.hpp"
#include "bkappa/rational.hpp"

namespace bkappa {

enum class FockOperator { Raise, Lower, Number, EvenProjector, OddProjector };

// Real matrix on the truncated Fock space spanned by |0>..|D-1>.
struct FockMatrix {
  long dimension = 0;
  Eigen::MatrixXd matrix;
  std::string label;
};

// f-|n> = sqrt(F+(n)) |n-1>, f+|n> = sqrt(F+(n+1)) |n+1>, truncated to D states.
// At kappa = 0 the ladder entries are confined to |0>, |1>.
// Throws std::domain_error for kappa < 0 and std::invalid_argument for D < 2.
FockMatrix build_operator(FockOperator which, long dimension, const Rational& kappa);

// Sum_a,b (f+)^a diag(c(n)) (f-)^b built from truncated ladder matrices.
FockMatrix build_operator(const NormalForm& nf, long dimension, const Rational& kappa);

// Exact matrix element of a ladder operator product between |n> and |m>:
// rational_part * sqrt(prod_{i in (lo, hi]} F+(i)) with lo = min(n, m),
// hi = max(n, m). Every monomial connecting the same pair shares the radicand.
struct ActionCoefficient {
  Rational rational_part;
  long span_lo = 0;
  long span_hi = 0;

  Rational radicand(const Rational& kappa) const;
  double value(const Rational& kappa) const;
  friend bool operator==(const ActionCoefficient&, const ActionCoefficient&) = default;
};

using ExactAction = std::map<long, ActionCoefficient>;

// Exact image nf|n>, keyed by the target occupation number. Terms with zero
// coefficient are dropped. Requires n >= 0 and kappa > 0.
ExactAction exact_action(const NormalForm& nf, long n, const Rational& kappa);

// Applies the generators of a word (rightmost first) to |n> step by step,
// multiplying the ladder square roots along the path. Independent of the
// rewriting engine. Empty result when the path hits the vacuum.
ExactAction exact_word_action(std::span<const Generator> word, long n, const Rational& kappa);

enum class SpectrumOperator { PlusMinus, MinusPlus };  // f+f-, f-f+

// First `levels` eigenvalues in Fock order: F+(n) for f+f-, F+(n+1) for f-f+.
std::vector<Rational> algebraic_spectrum(SpectrumOperator which, const Rational& kappa, long levels);

// Consecutive differences of the ascending-sorted spectrum.
std::vector<Rational> gap_analysis(std::vector<Rational> spectrum);

struct IsospectralReport {
  Rational kappa;
  long dimension = 0;
  bool fermion_case = false;         // kappa == 0: two-state module, full multisets
  std::vector<Rational> plus_minus;  // compared multiset from f+f- (zero removed)
  std::vector<Rational> minus_plus;  // compared multiset from f-f+
  bool holds = false;
};

// Diagonals of the truncated f+f- and f-f+ are taken exactly. For kappa > 0 the
// first D-2 levels of spec(f-f+) are compared with spec(f+f-) minus the ground
// state (truncation edge excluded). Requires D >= 4 and even, or kappa == 0.
IsospectralReport isospectral_check(const Rational& kappa, long dimension);

}  // namespace bkappa
