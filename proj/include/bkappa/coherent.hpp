#pragma once

#include <complex>
#include <vector>

#include "bkappa/rational.hpp"

namespace bkappa {

using Complex = std::complex<double>;

// Normalized eigenvector of f- with eigenvalue z, truncated to |0>..|D-1>.
struct CoherentState {
  Rational kappa;
  Complex z;
  long truncation = 0;
  std::vector<Complex> coefficients;
  double norm_sq = 0.0;        // sum |c_n|^2 after normalization
  double unnormalized_sum = 0.0;  // sum |c_n|^2 with c_0 = 1, before scaling
};

// Builds c_{n+1} = z c_n / sqrt(F+(n+1)) from c_0 = 1 and normalizes. D grows
// until the discarded tail of sum |c_n|^2, bounded by a geometric majorant
// using F+(i) >= min(1, kappa) i, falls below tol relative to the kept sum.
// Throws std::domain_error for kappa <= 0 and std::invalid_argument for tol <= 0.
CoherentState coherent_state(const Rational& kappa, Complex z, double tol = 1e-24);

// || f- |z> - z |z> || evaluated with truncated Fock matrices of size D.
double coherent_residual(const CoherentState& state);

// Largest violation of z c_n = sqrt(F+(n+1)) c_{n+1} over the stored coefficients.
double recurrence_violation(const CoherentState& state);

// Printed closed form z^n / sqrt(nu_n) with nu_{2m} = (2k)^{2m} m! Gamma(1/(2k)+m)
// and nu_{2m+1} = (2k)^{2m+1} m! Gamma(1/(2k)+m+1).
Complex closed_form_coefficient(const Rational& kappa, Complex z, long n);
double log_monomial_norm(const Rational& kappa, long n);  // log nu_n

// e_k(x) = sum_n (1/(2k) + n + x) x^{2n} / (n! Gamma(1/(2k) + n + 1)), summed to
// relative 1e-14. N_k(|z|^2) = e_k(|z|^2 / (2k)).
double e_kappa(const Rational& kappa, double x);
double e_kappa_term(const Rational& kappa, double x, long n);

}  // namespace bkappa
