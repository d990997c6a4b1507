#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "bkappa/rational.hpp"

namespace bkappa {

// Polynomial in the Bargmann variable z; coeffs[i] multiplies z^i.
template <class T>
struct Polynomial {
  std::vector<T> coeffs;

  T coefficient(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : T{}; }
  std::size_t size() const { return coeffs.size(); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out{std::vector<T>(std::max(a.size(), b.size()))};
    for (std::size_t i = 0; i < out.size(); ++i) out.coeffs[i] = a.coefficient(i) + b.coefficient(i);
    return out;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial out{std::vector<T>(std::max(a.size(), b.size()))};
    for (std::size_t i = 0; i < out.size(); ++i) out.coeffs[i] = a.coefficient(i) - b.coefficient(i);
    return out;
  }
  friend Polynomial operator*(const T& s, const Polynomial& a) {
    Polynomial out = a;
    for (auto& c : out.coeffs) c = s * c;
    return out;
  }
  // Equality up to trailing zeros.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
      if (!(a.coefficient(i) == b.coefficient(i))) return false;
    }
    return true;
  }
};

using BargmannPoly = Polynomial<std::complex<double>>;
using ExactPoly = Polynomial<Rational>;

namespace detail {
template <class T>
T from_rational(const Rational& r);
template <>
inline Rational from_rational<Rational>(const Rational& r) { return r; }
template <>
inline std::complex<double> from_rational<std::complex<double>>(const Rational& r) { return {r.to_double(), 0.0}; }
}  // namespace detail

// f+ realization: multiplication by z.
template <class T>
Polynomial<T> multiply_by_z(const Polynomial<T>& p) {
  Polynomial<T> out{std::vector<T>(p.size() + 1)};
  for (std::size_t i = 0; i < p.size(); ++i) out.coeffs[i + 1] = p.coeffs[i];
  return out;
}

template <class T>
Polynomial<T> derivative(const Polynomial<T>& p) {
  Polynomial<T> out{std::vector<T>(p.size() > 0 ? p.size() - 1 : 0)};
  for (std::size_t i = 1; i < p.size(); ++i) {
    out.coeffs[i - 1] = detail::from_rational<T>(Rational(static_cast<long>(i))) * p.coeffs[i];
  }
  return out;
}

// N realization: z d/dz.
template <class T>
Polynomial<T> euler_operator(const Polynomial<T>& p) {
  return multiply_by_z(derivative(p));
}

// p(z) -> p(-z); the realization of (-1)^N.
template <class T>
Polynomial<T> parity_flip(const Polynomial<T>& p) {
  Polynomial<T> out = p;
  for (std::size_t i = 1; i < out.size(); i += 2) out.coeffs[i] = -out.coeffs[i];
  return out;
}

// (p(z) - p(-z)) / (2z): keeps the odd part and lowers its degree by one.
template <class T>
Polynomial<T> fibonacci_difference(const Polynomial<T>& p) {
  Polynomial<T> diff = p - parity_flip(p);
  Polynomial<T> out{std::vector<T>(diff.size() > 0 ? diff.size() - 1 : 0)};
  const T half = detail::from_rational<T>(Rational(1, 2));
  for (std::size_t i = 1; i < diff.size(); ++i) out.coeffs[i - 1] = half * diff.coeffs[i];
  return out;
}

// D = kappa d/dz + (1 - kappa) (p(z) - p(-z)) / (2z).
template <class T>
Polynomial<T> generalized_derivative(const Rational& kappa, const Polynomial<T>& p) {
  const T k = detail::from_rational<T>(kappa);
  const T rest = detail::from_rational<T>(Rational(1) - kappa);
  return k * derivative(p) + rest * fibonacci_difference(p);
}

// (1/z) F+(z d/dz), applied monomial by monomial: z^m -> F+(m) z^(m-1).
template <class T>
Polynomial<T> structure_realization(const Rational& kappa, const Polynomial<T>& p);

// Normalized basis function f_n(z) = z^n / sqrt(nu_n). Requires kappa > 0.
BargmannPoly bargmann_monomial(const Rational& kappa, long n);

// Psi(z) = sum_n Psi_n f_n(z).
BargmannPoly bargmann_transform(std::span<const std::complex<double>> coeffs, const Rational& kappa);

}  // namespace bkappa
