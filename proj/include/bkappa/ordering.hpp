#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bkappa/kpoly.hpp"
#include "bkappa/nsigma_poly.hpp"

namespace bkappa {

// Coefficients of (f+ f-)^r = sum_{k=1..r} (f+)^k S(r, k, N) (f-)^k, middle
// placement, kappa symbolic.
class StirlingTable {
 public:
  StirlingTable(long order, std::vector<NSigmaPoly> entries);

  long order() const { return order_; }
  // S(r, k, N); zero for k outside [1, r].
  NSigmaPoly at(long k) const;
  const std::vector<NSigmaPoly>& entries() const { return entries_; }

  StirlingTable specialize_kappa(const Rational& kappa0) const;
  friend bool operator==(const StirlingTable&, const StirlingTable&) = default;

 private:
  long order_;
  std::vector<NSigmaPoly> entries_;  // entries_[k - 1]
};

// Left-multiplication scheme: S(r+1, k) = (-1)^(k-1) S(r, k-1, N+1) + h_k(N+k-1) S(r, k, N).
StirlingTable stirling(long r);

// The printed recurrence, taken literally (extra (-1)^(k-1) on the second term
// and no argument shift; the printed "S(r, k, c)" is read as S(r, k, N)).
StirlingTable stirling_paper_recurrence(long r);

// Printed table rows for r = 1..4. Throws std::out_of_range otherwise.
StirlingTable stirling_printed_table(long r);

struct WickFailure {
  long n;
  KPoly residual;  // F+(n)^r - sum_k ...
};

struct WickReport {
  long order = 0;
  long n_max = 0;
  bool holds = false;
  std::vector<WickFailure> failures;
};

// Checks F+(n)^r = sum_{k=1}^{min(r,n)} [prod_{j<k} F+(n-j)] S(r, k, n-k) for
// n = 0..n_max (n_max >= r) as polynomial identities in kappa. Uses only the parity-split
// structure function values, never the rewriting engine.
WickReport wick_verify(const StirlingTable& table, long n_max);

// B_r(N) = sum_k S(r, k, N) over stirling(r).
NSigmaPoly bell(long r);
// B_r at kappa = 0; constant in N.
Rational bell_limit_kappa0(long r);
// Expected kappa -> 0 value: r=1 -> 1, r=2 -> 0, r >= 3 by r mod 3.
Rational bell_kappa0_pattern(long r);

// Printed Bell rows for r = 1..4.
NSigmaPoly bell_printed(long r);

struct DiscrepancyEntry {
  std::string entry;
  NSigmaPoly printed;
  NSigmaPoly computed;
  std::optional<NSigmaPoly> literal_recurrence;  // from stirling_paper_recurrence
  bool agree = false;
  std::string note;
};

struct DiscrepancyReport {
  std::string convention;
  std::vector<DiscrepancyEntry> entries;
  std::vector<std::string> notes;
};

// Entry-by-entry audit of the printed Stirling and Bell tables (and the
// printed bosonized structure function) against the Wick-validated values.
// Throws std::invalid_argument unless 1 <= r_max <= 4.
DiscrepancyReport compare_with_paper(long r_max = 4);

}  // namespace bkappa
