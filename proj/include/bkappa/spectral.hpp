#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bkappa/rational.hpp"

namespace bkappa {

enum class PotentialFamily { V0, V1 };

struct PotentialSpec {
  PotentialFamily family = PotentialFamily::V0;
  double kappa = 0.0;
};

// V0 = k^2 x^2/4 + (1 - k^2)/(4k^2) x^-2 - (k - 1/2)
// V1 = k^2 x^2/4 - (1 - k)(3k - 1)/(4k^2) x^-2 + 1/2
// Throws std::domain_error for x <= 0 or kappa <= 0.
double potential_value(const PotentialSpec& spec, double x);
double inverse_square_coefficient(const PotentialSpec& spec);

// Dirichlet box (0, length) with `points` interior nodes x_j = j h, h = length/(points+1).
struct GridSpec {
  double length = 40.0;
  long points = 2000;

  double spacing() const { return length / static_cast<double>(points + 1); }
};

struct SymTridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // size n - 1

  long size() const { return static_cast<long>(diagonal.size()); }
};

// H = -d^2/dx^2 + V with second-order central differences.
SymTridiagonal discretize(const PotentialSpec& spec, const GridSpec& grid);
SymTridiagonal discretize(const std::function<double(double)>& potential, const GridSpec& grid);

// Number of eigenvalues strictly below `shift` (negative pivots of T - shift I).
long sturm_count(const SymTridiagonal& t, double shift);

// The `count` smallest eigenvalues in ascending order, each bisected on the
// Sturm count inside the Gershgorin interval to absolute tolerance tol.
std::vector<double> eigenvalues_sturm(const SymTridiagonal& t, long count, double tol = 1e-12);

struct LevelConvergence {
  long level = 0;
  std::vector<double> per_grid;
  double observed_order = 2.0;
  double extrapolated = 0.0;
  double target = 0.0;
  double relative_error = 0.0;
};

struct ConvergenceReport {
  PotentialFamily family = PotentialFamily::V0;
  double kappa = 0.0;
  double length = 0.0;
  std::vector<long> grids;
  std::vector<LevelConvergence> levels;
  double tolerance = 5e-3;
  bool passed = false;
  std::vector<std::string> warnings;
};

// Richardson extrapolation over the last grids; the order is estimated from
// three successive values when possible and falls back to 2 otherwise.
double richardson(const std::vector<double>& values, const std::vector<double>& spacings, double* order_out = nullptr);

// Regular-branch targets 2 kappa n + 1 for both V0 and V1. Requires at least
// three grids of increasing size. Warns (does not fail) for kappa >= 1/2.
ConvergenceReport cs_verify(PotentialFamily family, double kappa, long levels, const std::vector<long>& grids,
                            double length = 40.0, double tolerance = 5e-3);

struct PartnerComparison {
  double kappa = 0.0;
  std::vector<double> v0;
  std::vector<double> v1;
  double max_deviation_over_spacing = 0.0;  // max |v0_n - v1_n| / (2 kappa)
  bool passed = false;
};

PartnerComparison compare_partners(const ConvergenceReport& v0, const ConvergenceReport& v1, double tolerance = 5e-3);

// Closed-form radial oscillator levels kappa (2n + 1 + a) + shift for both
// branches a = +-1/(2 kappa) of V0; their union is the f+f- spectrum.
struct BranchSpectrum {
  std::vector<Rational> regular;    // a = +1/(2k): 2 k n + 1
  std::vector<Rational> irregular;  // a = -1/(2k): 2 k n
  bool union_matches_algebraic = false;
};

BranchSpectrum v0_branch_spectrum(const Rational& kappa, long levels);

std::string family_name(PotentialFamily family);

}  // namespace bkappa
