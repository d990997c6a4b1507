#pragma once

#include <string>

#include "bkappa/normal_form.hpp"
#include "bkappa/nsigma_poly.hpp"

namespace bkappa {

// Result of checking an operator identity LHS = RHS symbolically in kappa.
// difference is reduced(LHS - RHS); the identity holds iff it is zero.
struct IdentityReport {
  std::string name;
  NormalForm difference;
  bool holds = false;
};

IdentityReport make_identity_report(std::string name, const NormalForm& lhs, const NormalForm& rhs);

// {f-, f+} = 1 + 2 kappa N.
IdentityReport check_defining_relation();
// [N, f+] = f+ and [N, f-] = -f-.
IdentityReport check_number_commutator(Generator g);

enum class ReorderSide {
  LowerThroughRaises,  // f-(f+)^n = (-1)^n (f+)^n f- + h_n(N) (f+)^(n-1)
  LowersThroughRaise,  // (f-)^n f+ = (-1)^n f+ (f-)^n + (f-)^(n-1) h_n(N)
};

// Throws std::invalid_argument for n < 1.
IdentityReport reorder_identity_check(long n, ReorderSide side);

// [f-, f+] = Pi_0 + (2 kappa - 1) Pi_1.
IdentityReport check_graded_commutator();

struct Bosonization {
  NormalForm x_plus;         // (f+)^2
  NormalForm x_minus;        // (f-)^2
  NSigmaPoly f_of_n;         // diagonal of X+X-, i.e. F+(N) F+(N-1)
  NSigmaPoly commutator;     // diagonal of X-X+ - X+X-
  NSigmaPoly printed_f_of_n; // kappa^2 N(N-1) + kappa(kappa-1) N - kappa(kappa-1) Pi_1
  bool commutator_matches = false;  // commutator == 2 kappa (2 kappa N + 1)
  bool printed_agrees = false;
};

Bosonization bosonize();

// 2 kappa (2 kappa N + 1).
NSigmaPoly bosonic_commutator_expected();

}  // namespace bkappa
