#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bkappa/kpoly.hpp"
#include "bkappa/rational.hpp"

namespace bkappa {

// Element p(N) + q(N)·sigma of Q[kappa][N] ⊕ Q[kappa][N]·sigma, where N is the
// number operator and sigma = (-1)^N. sigma^2 = 1 and sigma commutes with N,
// so sigma never appears to a power. even_part()[i] and sigma_part()[i] are
// the kappa-polynomial coefficients of N^i; trailing zeros are trimmed, which
// makes structural equality coincide with ring equality.
class NSigmaPoly {
 public:
  NSigmaPoly() = default;
  NSigmaPoly(std::vector<KPoly> even, std::vector<KPoly> sigma);

  static NSigmaPoly constant(const KPoly& c);
  static NSigmaPoly number();  // N
  static NSigmaPoly sigma();   // (-1)^N
  static NSigmaPoly kappa();

  const std::vector<KPoly>& even_part() const { return even_; }
  const std::vector<KPoly>& sigma_part() const { return sigma_; }

  bool is_zero() const { return even_.empty() && sigma_.empty(); }
  std::optional<std::size_t> kappa_degree() const;
  std::optional<std::size_t> n_degree() const;

  // N -> N + d, sigma -> (-1)^d sigma.
  NSigmaPoly shifted(long d) const;

  // Substitutes N = n, sigma = (-1)^n, leaving kappa symbolic. Rejects n < 0.
  KPoly at(long n) const;
  // Substitutes kappa = kappa0, N = n, sigma = (-1)^n. Rejects n < 0.
  Rational evaluate(const Rational& kappa0, long n) const;
  // Substitutes kappa = kappa0 only; the result has constant KPoly coefficients.
  NSigmaPoly specialize_kappa(const Rational& kappa0) const;

  NSigmaPoly operator-() const;
  NSigmaPoly& operator+=(const NSigmaPoly& rhs);
  NSigmaPoly& operator-=(const NSigmaPoly& rhs);
  NSigmaPoly& operator*=(const NSigmaPoly& rhs);

  friend NSigmaPoly operator+(NSigmaPoly a, const NSigmaPoly& b) { return a += b; }
  friend NSigmaPoly operator-(NSigmaPoly a, const NSigmaPoly& b) { return a -= b; }
  friend NSigmaPoly operator*(const NSigmaPoly& a, const NSigmaPoly& b);
  friend NSigmaPoly operator*(const KPoly& c, const NSigmaPoly& a);
  friend NSigmaPoly operator*(const NSigmaPoly& a, const KPoly& c) { return c * a; }
  friend bool operator==(const NSigmaPoly&, const NSigmaPoly&) = default;

  NSigmaPoly pow(unsigned exponent) const;

  // Human-readable form, e.g. "1 + 2k*N - 1/2*s".
  std::string to_string() const;

 private:
  void trim();
  std::vector<KPoly> even_;
  std::vector<KPoly> sigma_;
};

}  // namespace bkappa
