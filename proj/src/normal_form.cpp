#include "bkappa/normal_form.hpp"

#include <algorithm>
#include <stdexcept>

#include "bkappa/structure.hpp"

namespace bkappa {

namespace {

// Product of one monomial pair, (f+)^a c (f-)^b · (f+)^a2 c2 (f-)^b2.
void multiply_monomials(long a, const NSigmaPoly& c, long b, long a2, const NSigmaPoly& c2, long b2,
                        NormalForm& out) {
  // (f-)^b (f+)^a2 = prod_{j<m} F+(N + b - j) · (f-)^(b-m) (f+)^(a2-m)
  const long m = std::min(b, a2);
  static const NSigmaPoly f_plus = structure_function_poly();
  NSigmaPoly middle = c;
  for (long j = 0; j < m; ++j) middle *= f_plus.shifted(b - j);

  if (b > m) {
    // (f-)^(b-m) c2(N) = c2(N + b - m) (f-)^(b-m)
    out += NormalForm::term(a, middle * c2.shifted(b - m), b - m + b2);
  } else {
    // c(N) (f+)^(a2-m) = (f+)^(a2-m) c(N + a2 - m)
    out += NormalForm::term(a + a2 - m, middle.shifted(a2 - m) * c2, b2);
  }
}

}  // namespace

NormalForm NormalForm::identity() { return diagonal(NSigmaPoly::constant(KPoly(1))); }

NormalForm NormalForm::generator(Generator g) {
  const NSigmaPoly one = NSigmaPoly::constant(KPoly(1));
  return g == Generator::Raise ? term(1, one, 0) : term(0, one, 1);
}

NormalForm NormalForm::term(long raise, const NSigmaPoly& coeff, long lower) {
  if (raise < 0 || lower < 0) throw std::invalid_argument("NormalForm::term: negative power");
  NormalForm out;
  out.add_term(raise, coeff, lower);
  return out;
}

NSigmaPoly NormalForm::coefficient(long raise, long lower) const {
  auto it = terms_.find({raise, lower});
  return it == terms_.end() ? NSigmaPoly() : it->second;
}

NormalForm NormalForm::reduced() const {
  static const NSigmaPoly f_plus = structure_function_poly();
  NormalForm out;
  for (const auto& [key, coeff] : terms_) {
    auto [a, b] = key;
    NSigmaPoly c = coeff;
    // f+ c(N) f- = c(N-1) F+(N)
    while (a > 0 && b > 0) {
      c = c.shifted(-1) * f_plus;
      --a;
      --b;
    }
    out.add_term(a, c, b);
  }
  return out;
}

NSigmaPoly NormalForm::diagonal_part() const { return reduced().coefficient(0, 0); }

NormalForm NormalForm::operator-() const {
  NormalForm out = *this;
  for (auto& [key, coeff] : out.terms_) coeff = -coeff;
  return out;
}

NormalForm& NormalForm::operator+=(const NormalForm& rhs) {
  for (const auto& [key, coeff] : rhs.terms_) add_term(key.first, coeff, key.second);
  return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& rhs) { return *this += -rhs; }

NormalForm operator*(const NormalForm& a, const NormalForm& b) {
  NormalForm out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      multiply_monomials(ka.first, ca, ka.second, kb.first, cb, kb.second, out);
    }
  }
  return out;
}

NormalForm operator*(const KPoly& scalar, const NormalForm& a) {
  NormalForm out;
  for (const auto& [key, coeff] : a.terms_) out.add_term(key.first, scalar * coeff, key.second);
  return out;
}

NormalForm NormalForm::pow(unsigned exponent) const {
  NormalForm out = identity();
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

std::string NormalForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    std::string piece;
    if (key.first > 0) piece += "(f+)^" + std::to_string(key.first) + " ";
    piece += "[" + coeff.to_string() + "]";
    if (key.second > 0) piece += " (f-)^" + std::to_string(key.second);
    out += piece;
  }
  return out;
}

void NormalForm::add_term(long raise, const NSigmaPoly& coeff, long lower) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({raise, lower}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalForm normal_mul(const NormalForm& a, const NormalForm& b) { return a * b; }

NormalForm word_normalize(std::span<const Generator> word) {
  NormalForm out = NormalForm::identity();
  for (Generator g : word) out = out * NormalForm::generator(g);
  return out;
}

NormalForm word_normalize_reverse(std::span<const Generator> word) {
  NormalForm out = NormalForm::identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = NormalForm::generator(*it) * out;
  return out;
}

bool operator_equal(const NormalForm& a, const NormalForm& b) { return (a - b).reduced().is_zero(); }

std::vector<Generator> parse_word(const std::string& text) {
  std::vector<Generator> word;
  for (char c : text) {
    if (c == '+') {
      word.push_back(Generator::Raise);
    } else if (c == '-') {
      word.push_back(Generator::Lower);
    } else if (c != ' ') {
      throw std::invalid_argument("word may contain only '+' and '-'");
    }
  }
  return word;
}

std::string word_to_string(std::span<const Generator> word) {
  std::string out;
  for (Generator g : word) out += g == Generator::Raise ? "f+" : "f-";
  return out.empty() ? "1" : out;
}

}  // namespace bkappa
