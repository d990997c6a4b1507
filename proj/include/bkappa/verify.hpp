#pragma once

#include <string>
#include <vector>

#include "bkappa/rational.hpp"

namespace bkappa {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class Suite { Algebra, Ordering, Analytic, Spectral };

std::vector<CheckResult> run_suite(Suite suite);
// Runs every suite; with parallel = true the suites run concurrently. Results
// keep suite order either way.
std::vector<CheckResult> run_all(bool parallel = false);

std::string suite_name(Suite suite);

// Ladder actions on normalized monomials f_0..f_max_degree and the exact
// anticommutators {d_-1, z}, {D, z} on rational polynomials up to max_degree.
// Requires kappa > 0 and max_degree >= 0.
std::vector<CheckResult> bargmann_checks(const Rational& kappa, long max_degree);

}  // namespace bkappa
