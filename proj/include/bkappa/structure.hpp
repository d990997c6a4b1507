#pragma once

#include "bkappa/kpoly.hpp"
#include "bkappa/nsigma_poly.hpp"
#include "bkappa/rational.hpp"

namespace bkappa {

enum class Parity { Even, Odd };

// F+(n), the eigenvalue of f+f- on |n>: kappa*n for even n, 1 + kappa*(n-1)
// for odd n. Throws std::domain_error for kappa < 0 or n < 0.
Rational structure_function_value(const Rational& kappa, long n);

// F+(n) with kappa left symbolic (parity-split closed form). Throws for n < 0.
KPoly structure_function_symbolic(long n);

// F+(n) via the alternating sum (-1)^(n-1) sum_{m<n} (-1)^m (1 + 2 kappa m).
KPoly structure_function_alternating(long n);

// F+(N) = kappa N + (1 - kappa) Pi_1 as a ring element.
NSigmaPoly structure_function_poly();

// G+(N) = 1 + 2 kappa N, the anticommutator {f-, f+}.
NSigmaPoly anticommutator_poly();

// Pi_0 = (1 + sigma)/2 and Pi_1 = (1 - sigma)/2.
NSigmaPoly projector(Parity parity);

// Remainder coefficient h_k(N) of f-(f+)^k = (-1)^k (f+)^k f- + h_k(N) (f+)^(k-1):
// (1 - (-1)^k)/2 (1 + kappa + 2 kappa N) + (-1)^k kappa k.
NSigmaPoly reorder_remainder(long k);

}  // namespace bkappa
