#include "bkappa/bargmann.hpp"

#include <cmath>
#include <stdexcept>

#include "bkappa/coherent.hpp"
#include "bkappa/structure.hpp"

namespace bkappa {

template <class T>
Polynomial<T> structure_realization(const Rational& kappa, const Polynomial<T>& p) {
  Polynomial<T> out{std::vector<T>(p.size() > 0 ? p.size() - 1 : 0)};
  for (std::size_t m = 1; m < p.size(); ++m) {
    out.coeffs[m - 1] = detail::from_rational<T>(structure_function_value(kappa, static_cast<long>(m))) * p.coeffs[m];
  }
  return out;
}

template Polynomial<Rational> structure_realization(const Rational&, const Polynomial<Rational>&);
template Polynomial<std::complex<double>> structure_realization(const Rational&,
                                                                const Polynomial<std::complex<double>>&);

BargmannPoly bargmann_monomial(const Rational& kappa, long n) {
  if (n < 0) throw std::invalid_argument("monomial index must be >= 0");
  BargmannPoly out{std::vector<std::complex<double>>(static_cast<std::size_t>(n + 1))};
  out.coeffs.back() = std::exp(-0.5 * log_monomial_norm(kappa, n));
  return out;
}

BargmannPoly bargmann_transform(std::span<const std::complex<double>> coeffs, const Rational& kappa) {
  if (kappa.sign() <= 0) throw std::domain_error("Bargmann transform needs kappa > 0");
  BargmannPoly out{std::vector<std::complex<double>>(coeffs.size())};
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    out.coeffs[n] = coeffs[n] * std::exp(-0.5 * log_monomial_norm(kappa, static_cast<long>(n)));
  }
  return out;
}

}  // namespace bkappa
