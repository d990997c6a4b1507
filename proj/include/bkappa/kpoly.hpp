#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bkappa/rational.hpp"

namespace bkappa {

// Univariate polynomial in the deformation parameter kappa with exact
// rational coefficients. coefficients()[i] multiplies kappa^i; trailing zeros
// are never stored, so the zero polynomial has no coefficients.
class KPoly {
 public:
  KPoly() = default;
  KPoly(Rational constant);  // NOLINT
  KPoly(long constant) : KPoly(Rational(constant)) {}  // NOLINT
  explicit KPoly(std::vector<Rational> coefficients);

  static KPoly kappa();
  static KPoly monomial(const Rational& c, std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const;

  Rational evaluate(const Rational& kappa) const;

  KPoly operator-() const;
  KPoly& operator+=(const KPoly& rhs);
  KPoly& operator-=(const KPoly& rhs);
  KPoly& operator*=(const KPoly& rhs);

  friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
  friend KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
  friend KPoly operator*(const KPoly& a, const KPoly& b);
  friend bool operator==(const KPoly&, const KPoly&) = default;

  KPoly pow(unsigned exponent) const;

  // e.g. "1 + 2k - 4k^2"; var names the parameter.
  std::string to_string(const std::string& var = "k") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace bkappa
