#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bkappa/nsigma_poly.hpp"

namespace bkappa {

enum class Generator { Raise, Lower };  // f+, f-

// Finite sum of monomials (f+)^a c(N, sigma, kappa) (f-)^b. The coefficient
// always sits between the raising and lowering blocks. Zero coefficients are
// never stored, so the zero operator has no terms.
//
// The rewriting rules are f- f+ -> F+(N+1), c(N) f+ -> f+ c(N+1) and
// c(N) f- -> f- c(N-1) (sigma flips sign with every move). The result of
// multiplication keeps monomials such as f+ f- as written; reduced() also
// applies f+ f- -> F+(N), which gives the unique representative of the
// operator on Fock space (every term then has a == 0 or b == 0).
class NormalForm {
 public:
  using Key = std::pair<long, long>;  // (raise power, lower power)

  NormalForm() = default;

  static NormalForm identity();
  static NormalForm generator(Generator g);
  static NormalForm term(long raise, const NSigmaPoly& coeff, long lower);
  static NormalForm diagonal(const NSigmaPoly& coeff) { return term(0, coeff, 0); }

  const std::map<Key, NSigmaPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  NSigmaPoly coefficient(long raise, long lower) const;

  NormalForm reduced() const;
  // Coefficient of (0,0) in reduced(); the diagonal part of the operator.
  NSigmaPoly diagonal_part() const;

  NormalForm operator-() const;
  NormalForm& operator+=(const NormalForm& rhs);
  NormalForm& operator-=(const NormalForm& rhs);
  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  friend NormalForm operator*(const NormalForm& a, const NormalForm& b);
  friend NormalForm operator*(const KPoly& scalar, const NormalForm& a);
  friend bool operator==(const NormalForm&, const NormalForm&) = default;

  NormalForm pow(unsigned exponent) const;

  std::string to_string() const;

 private:
  void add_term(long raise, const NSigmaPoly& coeff, long lower);
  std::map<Key, NSigmaPoly> terms_;
};

NormalForm normal_mul(const NormalForm& a, const NormalForm& b);

// Left-to-right fold of the generators; the empty word is the identity.
NormalForm word_normalize(std::span<const Generator> word);
// Same result built by right-to-left accumulation.
NormalForm word_normalize_reverse(std::span<const Generator> word);

// Equality as operators on the Fock space.
bool operator_equal(const NormalForm& a, const NormalForm& b);

// "+-+" style word text, '+' for f+ and '-' for f-.
std::vector<Generator> parse_word(const std::string& text);
std::string word_to_string(std::span<const Generator> word);

}  // namespace bkappa
