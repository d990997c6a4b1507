#include "bkappa/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bkappa/fock.hpp"

namespace bkappa {

double inverse_square_coefficient(const PotentialSpec& spec) {
  const double k = spec.kappa;
  if (!(k > 0.0)) throw std::domain_error("potential requires kappa > 0");
  if (spec.family == PotentialFamily::V0) return (1.0 - k * k) / (4.0 * k * k);
  return -(1.0 - k) * (3.0 * k - 1.0) / (4.0 * k * k);
}

double potential_value(const PotentialSpec& spec, double x) {
  if (!(x > 0.0)) throw std::domain_error("potential is defined for x > 0");
  const double k = spec.kappa;
  const double g = inverse_square_coefficient(spec);
  const double constant = spec.family == PotentialFamily::V0 ? -(k - 0.5) : 0.5;
  return k * k * x * x / 4.0 + g / (x * x) + constant;
}

SymTridiagonal discretize(const std::function<double(double)>& potential, const GridSpec& grid) {
  if (grid.points < 2 || !(grid.length > 0.0)) throw std::invalid_argument("invalid grid");
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  SymTridiagonal t;
  t.diagonal.resize(static_cast<std::size_t>(grid.points));
  t.off_diagonal.assign(static_cast<std::size_t>(grid.points - 1), -inv_h2);
  for (long j = 1; j <= grid.points; ++j) {
    t.diagonal[static_cast<std::size_t>(j - 1)] = 2.0 * inv_h2 + potential(static_cast<double>(j) * h);
  }
  return t;
}

SymTridiagonal discretize(const PotentialSpec& spec, const GridSpec& grid) {
  return discretize([&spec](double x) { return potential_value(spec, x); }, grid);
}

long sturm_count(const SymTridiagonal& t, double shift) {
  long negatives = 0;
  double pivot = 1.0;
  const double tiny = std::numeric_limits<double>::min();
  for (long i = 0; i < t.size(); ++i) {
    double d = t.diagonal[static_cast<std::size_t>(i)] - shift;
    if (i > 0) {
      const double b = t.off_diagonal[static_cast<std::size_t>(i - 1)];
      d -= b * b / pivot;
    }
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++negatives;
    pivot = d;
  }
  return negatives;
}

std::vector<double> eigenvalues_sturm(const SymTridiagonal& t, long count, double tol) {
  if (count < 1 || count > t.size()) throw std::invalid_argument("eigenvalue count out of range");
  if (t.off_diagonal.size() + 1 != t.diagonal.size()) throw std::invalid_argument("malformed tridiagonal matrix");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (long i = 0; i < t.size(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(t.off_diagonal[static_cast<std::size_t>(i - 1)]);
    if (i + 1 < t.size()) radius += std::abs(t.off_diagonal[static_cast<std::size_t>(i)]);
    lo = std::min(lo, t.diagonal[static_cast<std::size_t>(i)] - radius);
    hi = std::max(hi, t.diagonal[static_cast<std::size_t>(i)] + radius);
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw std::runtime_error("no finite Gershgorin interval");
  const double pad = 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  lo -= pad;
  hi += pad;

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  double floor = lo;
  for (long k = 0; k < count; ++k) {
    // smallest lambda with more than k eigenvalues below it
    double a = floor, b = hi;
    while (b - a > tol && b - a > 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b))) {
      const double mid = 0.5 * (a + b);
      if (sturm_count(t, mid) > k) {
        b = mid;
      } else {
        a = mid;
      }
    }
    const double value = 0.5 * (a + b);
    out.push_back(value);
    floor = a;
  }
  return out;
}

double richardson(const std::vector<double>& values, const std::vector<double>& spacings, double* order_out) {
  if (values.size() != spacings.size() || values.size() < 2) {
    throw std::invalid_argument("richardson needs matching values and spacings");
  }
  const std::size_t n = values.size();
  double order = 2.0;
  if (n >= 3) {
    const double d1 = values[n - 3] - values[n - 2];
    const double d2 = values[n - 2] - values[n - 1];
    const double ratio = spacings[n - 2] / spacings[n - 1];
    if (d1 != 0.0 && d2 != 0.0 && d1 / d2 > 1.0) {
      const double estimate = std::log(d1 / d2) / std::log(ratio);
      if (estimate >= 0.25 && estimate <= 4.0) order = estimate;
    }
  }
  if (order_out != nullptr) *order_out = order;
  const double factor = std::pow(spacings[n - 2] / spacings[n - 1], order);
  return values[n - 1] + (values[n - 1] - values[n - 2]) / (factor - 1.0);
}

ConvergenceReport cs_verify(PotentialFamily family, double kappa, long levels, const std::vector<long>& grids,
                            double length, double tolerance) {
  if (!(kappa > 0.0)) throw std::domain_error("kappa must be > 0");
  if (levels < 1) throw std::invalid_argument("levels must be >= 1");
  if (grids.size() < 3 || !std::is_sorted(grids.begin(), grids.end())) {
    throw std::invalid_argument("need at least three grids of increasing size");
  }
  ConvergenceReport report;
  report.family = family;
  report.kappa = kappa;
  report.length = length;
  report.grids = grids;
  report.tolerance = tolerance;
  if (kappa >= 0.5) {
    report.warnings.push_back("kappa >= 1/2: Dirichlet conditions are not guaranteed to select the 2kn+1 branch");
  }
  if (length < 10.0 / std::sqrt(kappa)) {
    report.warnings.push_back("box length is below 10/sqrt(kappa); the outer wall may shift the levels");
  }

  const PotentialSpec spec{family, kappa};
  std::vector<std::vector<double>> per_grid;
  std::vector<double> spacings;
  for (long m : grids) {
    GridSpec grid{length, m};
    spacings.push_back(grid.spacing());
    per_grid.push_back(eigenvalues_sturm(discretize(spec, grid), levels, 1e-13));
  }

  report.passed = true;
  for (long level = 0; level < levels; ++level) {
    LevelConvergence lc;
    lc.level = level;
    for (const auto& values : per_grid) lc.per_grid.push_back(values[static_cast<std::size_t>(level)]);
    lc.extrapolated = richardson(lc.per_grid, spacings, &lc.observed_order);
    lc.target = 2.0 * kappa * static_cast<double>(level) + 1.0;
    lc.relative_error = std::abs(lc.extrapolated - lc.target) / std::abs(lc.target);
    report.passed = report.passed && lc.relative_error <= tolerance;
    report.levels.push_back(std::move(lc));
  }
  return report;
}

PartnerComparison compare_partners(const ConvergenceReport& v0, const ConvergenceReport& v1, double tolerance) {
  PartnerComparison out;
  out.kappa = v0.kappa;
  const std::size_t n = std::min(v0.levels.size(), v1.levels.size());
  const double spacing = 2.0 * v0.kappa;
  for (std::size_t i = 0; i < n; ++i) {
    out.v0.push_back(v0.levels[i].extrapolated);
    out.v1.push_back(v1.levels[i].extrapolated);
    out.max_deviation_over_spacing =
        std::max(out.max_deviation_over_spacing, std::abs(out.v0.back() - out.v1.back()) / spacing);
  }
  out.passed = n > 0 && out.max_deviation_over_spacing <= tolerance;
  return out;
}

BranchSpectrum v0_branch_spectrum(const Rational& kappa, long levels) {
  if (kappa.sign() <= 0) throw std::domain_error("kappa must be > 0");
  BranchSpectrum out;
  const Rational a = (Rational(2) * kappa).inverse();
  const Rational shift = Rational(1, 2) - kappa;
  for (long n = 0; n < levels; ++n) {
    const Rational base = Rational(2 * n + 1);
    out.regular.push_back(kappa * (base + a) + shift);
    out.irregular.push_back(kappa * (base - a) + shift);
  }
  std::vector<Rational> merged = out.regular;
  merged.insert(merged.end(), out.irregular.begin(), out.irregular.end());
  std::sort(merged.begin(), merged.end());
  std::vector<Rational> algebraic = algebraic_spectrum(SpectrumOperator::PlusMinus, kappa, 2 * levels);
  std::sort(algebraic.begin(), algebraic.end());
  out.union_matches_algebraic = merged == algebraic;
  return out;
}

std::string family_name(PotentialFamily family) { return family == PotentialFamily::V0 ? "v0" : "v1"; }

}  // namespace bkappa
