#include "bkappa/structure.hpp"

#include <stdexcept>

namespace bkappa {

Rational structure_function_value(const Rational& kappa, long n) {
  if (kappa.sign() < 0) throw std::domain_error("structure function requires kappa >= 0");
  if (n < 0) throw std::domain_error("structure function requires n >= 0");
  if (n % 2 == 0) return kappa * Rational(n);
  return Rational(1) + kappa * Rational(n - 1);
}

KPoly structure_function_symbolic(long n) {
  if (n < 0) throw std::domain_error("structure function requires n >= 0");
  if (n % 2 == 0) return KPoly::monomial(Rational(n), 1);
  return KPoly(1) + KPoly::monomial(Rational(n - 1), 1);
}

KPoly structure_function_alternating(long n) {
  if (n < 0) throw std::domain_error("structure function requires n >= 0");
  KPoly sum;
  for (long m = 0; m < n; ++m) {
    KPoly g = KPoly(1) + KPoly::monomial(Rational(2 * m), 1);
    if (m % 2 == 0) {
      sum += g;
    } else {
      sum -= g;
    }
  }
  return (n - 1) % 2 == 0 ? sum : -sum;
}

NSigmaPoly projector(Parity parity) {
  const Rational half(1, 2);
  return NSigmaPoly({KPoly(half)}, {KPoly(parity == Parity::Even ? half : -half)});
}

NSigmaPoly structure_function_poly() {
  const NSigmaPoly kappa = NSigmaPoly::kappa();
  return kappa * NSigmaPoly::number() +
         (NSigmaPoly::constant(KPoly(1)) - kappa) * projector(Parity::Odd);
}

NSigmaPoly anticommutator_poly() {
  return NSigmaPoly::constant(KPoly(1)) + NSigmaPoly::constant(KPoly::monomial(Rational(2), 1)) *
                                              NSigmaPoly::number();
}

NSigmaPoly reorder_remainder(long k) {
  const NSigmaPoly kappa = NSigmaPoly::kappa();
  NSigmaPoly out = NSigmaPoly::constant(KPoly::monomial(Rational(k % 2 == 0 ? k : -k), 1));
  if (k % 2 != 0) {
    out += kappa + anticommutator_poly();
  }
  return out;
}

}  // namespace bkappa
