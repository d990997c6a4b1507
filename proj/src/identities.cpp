#include "bkappa/identities.hpp"

#include <stdexcept>

#include "bkappa/structure.hpp"

namespace bkappa {

namespace {

NormalForm gen(Generator g) { return NormalForm::generator(g); }

const NSigmaPoly& one() {
  static const NSigmaPoly value = NSigmaPoly::constant(KPoly(1));
  return value;
}

}  // namespace

IdentityReport make_identity_report(std::string name, const NormalForm& lhs, const NormalForm& rhs) {
  IdentityReport report{std::move(name), (lhs - rhs).reduced(), false};
  report.holds = report.difference.is_zero();
  return report;
}

IdentityReport check_defining_relation() {
  const NormalForm up = gen(Generator::Raise);
  const NormalForm down = gen(Generator::Lower);
  return make_identity_report("{f-, f+} = 1 + 2kN", down * up + up * down,
                              NormalForm::diagonal(anticommutator_poly()));
}

IdentityReport check_number_commutator(Generator g) {
  const NormalForm number = NormalForm::diagonal(NSigmaPoly::number());
  const NormalForm x = gen(g);
  const NormalForm expected = g == Generator::Raise ? x : -x;
  return make_identity_report(g == Generator::Raise ? "[N, f+] = f+" : "[N, f-] = -f-",
                              number * x - x * number, expected);
}

IdentityReport reorder_identity_check(long n, ReorderSide side) {
  if (n < 1) throw std::invalid_argument("reorder_identity_check requires n >= 1");
  const NormalForm up = gen(Generator::Raise);
  const NormalForm down = gen(Generator::Lower);
  const KPoly sign(n % 2 == 0 ? 1 : -1);
  const NormalForm remainder = NormalForm::diagonal(reorder_remainder(n));
  const auto un = static_cast<unsigned>(n);
  if (side == ReorderSide::LowerThroughRaises) {
    NormalForm lhs = down * up.pow(un);
    NormalForm rhs = sign * (up.pow(un) * down) + remainder * up.pow(un - 1);
    return make_identity_report("f-(f+)^" + std::to_string(n) + " reordering", lhs, rhs);
  }
  NormalForm lhs = down.pow(un) * up;
  NormalForm rhs = sign * (up * down.pow(un)) + down.pow(un - 1) * remainder;
  return make_identity_report("(f-)^" + std::to_string(n) + "f+ reordering", lhs, rhs);
}

IdentityReport check_graded_commutator() {
  const NormalForm up = gen(Generator::Raise);
  const NormalForm down = gen(Generator::Lower);
  NSigmaPoly rhs = projector(Parity::Even) +
                   (NSigmaPoly::constant(KPoly::monomial(Rational(2), 1)) - one()) * projector(Parity::Odd);
  return make_identity_report("[f-, f+] = Pi0 + (2k - 1)Pi1", down * up - up * down, NormalForm::diagonal(rhs));
}

NSigmaPoly bosonic_commutator_expected() {
  const NSigmaPoly two_kappa = NSigmaPoly::constant(KPoly::monomial(Rational(2), 1));
  return two_kappa * (two_kappa * NSigmaPoly::number() + one());
}

Bosonization bosonize() {
  Bosonization out;
  const NormalForm up = gen(Generator::Raise);
  const NormalForm down = gen(Generator::Lower);
  out.x_plus = up * up;
  out.x_minus = down * down;
  out.f_of_n = (out.x_plus * out.x_minus).diagonal_part();
  out.commutator = (out.x_minus * out.x_plus - out.x_plus * out.x_minus).diagonal_part();
  out.commutator_matches = out.commutator == bosonic_commutator_expected();

  const NSigmaPoly kappa = NSigmaPoly::kappa();
  const NSigmaPoly n = NSigmaPoly::number();
  const NSigmaPoly kk1 = kappa * (kappa - one());
  out.printed_f_of_n = kappa * kappa * n * (n - one()) + kk1 * n - kk1 * projector(Parity::Odd);
  out.printed_agrees = out.printed_f_of_n == out.f_of_n;
  return out;
}

}  // namespace bkappa
