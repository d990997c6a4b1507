#include "bkappa/verify.hpp"

#include <cmath>
#include <future>
#include <random>

#include "bkappa/bargmann.hpp"
#include "bkappa/coherent.hpp"
#include "bkappa/fock.hpp"
#include "bkappa/grassmann.hpp"
#include "bkappa/identities.hpp"
#include "bkappa/ordering.hpp"
#include "bkappa/spectral.hpp"
#include "bkappa/structure.hpp"

namespace bkappa {

namespace {

CheckResult check(Suite suite, std::string name, bool passed, std::string detail = {}) {
  return {suite_name(suite), std::move(name), passed, std::move(detail)};
}

std::vector<CheckResult> algebra_suite() {
  const Suite s = Suite::Algebra;
  std::vector<CheckResult> out;
  auto add = [&](const IdentityReport& r) {
    out.push_back(check(s, r.name, r.holds, r.holds ? "" : r.difference.to_string()));
  };
  add(check_defining_relation());
  add(check_number_commutator(Generator::Raise));
  add(check_number_commutator(Generator::Lower));
  for (long n = 1; n <= 8; ++n) {
    add(reorder_identity_check(n, ReorderSide::LowerThroughRaises));
    add(reorder_identity_check(n, ReorderSide::LowersThroughRaise));
  }
  add(check_graded_commutator());

  bool recursion = true, alternating = true, closed = true;
  const NSigmaPoly f_poly = structure_function_poly();
  for (long n = 0; n <= 200; ++n) {
    recursion = recursion && structure_function_symbolic(n + 1) + structure_function_symbolic(n) ==
                                 KPoly(1) + KPoly::monomial(Rational(2 * n), 1);
    alternating = alternating && structure_function_alternating(n) == structure_function_symbolic(n);
    closed = closed && f_poly.at(n) == structure_function_symbolic(n);
  }
  out.push_back(check(s, "F+(n+1) + F+(n) = 1 + 2kn, n <= 200", recursion));
  out.push_back(check(s, "alternating-sum form of F+, n <= 200", alternating));
  out.push_back(check(s, "kN + (1-k)Pi1 matches parity-split F+, n <= 200", closed));

  Bosonization b = bosonize();
  out.push_back(check(s, "[X-, X+] = 2k(2kN + 1)", b.commutator_matches, b.commutator.to_string()));
  out.push_back(check(s, "X+X- diagonal = F+(N)F+(N-1)",
                      b.f_of_n == structure_function_poly() * structure_function_poly().shifted(-1),
                      b.f_of_n.to_string()));
  return out;
}

std::vector<CheckResult> ordering_suite() {
  const Suite s = Suite::Ordering;
  std::vector<CheckResult> out;
  for (long r = 1; r <= 6; ++r) {
    WickReport w = wick_verify(stirling(r), 40);
    out.push_back(check(s, "Wick diagonal identity r=" + std::to_string(r) + ", n<=40", w.holds));
  }
  for (long r = 1; r <= 12; ++r) {
    Rational got = bell_limit_kappa0(r);
    out.push_back(check(s, "Bell r=" + std::to_string(r) + " at k=0", got == bell_kappa0_pattern(r), got.compact()));
  }
  bool limits = true;
  for (long r = 1; r <= 12; ++r) {
    limits = limits && stirling(r).specialize_kappa(Rational(0)) == stirling_paper_recurrence(r).specialize_kappa(Rational(0));
  }
  out.push_back(check(s, "both recurrences agree at k=0, r<=12", limits));
  bool signs = true;
  for (long r = 1; r <= 8; ++r) {
    const long e = (r * (r - 1) / 2) % 2;
    signs = signs && stirling(r).at(r) == NSigmaPoly::constant(KPoly(e == 0 ? 1 : -1));
  }
  out.push_back(check(s, "S(r,r) = (-1)^(r(r-1)/2), r<=8", signs));
  return out;
}

std::vector<CheckResult> analytic_suite() {
  const Suite s = Suite::Analytic;
  std::vector<CheckResult> out;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> kappa_num(5, 300);
  std::uniform_real_distribution<double> radius(0.0, 2.0), angle(0.0, 2.0 * M_PI);
  double worst_residual = 0.0, worst_norm = 0.0, worst_term = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Rational kappa(kappa_num(rng), 100);
    const Complex z = std::polar(radius(rng), angle(rng));
    CoherentState st = coherent_state(kappa, z, 1e-24);
    worst_residual = std::max(worst_residual, coherent_residual(st));
    worst_norm = std::max(worst_norm, std::abs(st.norm_sq - 1.0));
    const double x = std::norm(z) / (2.0 * kappa.to_double());
    for (long n = 0; 2 * n + 1 < st.truncation; ++n) {
      const double pair = std::norm(closed_form_coefficient(kappa, z, 2 * n)) +
                          std::norm(closed_form_coefficient(kappa, z, 2 * n + 1));
      const double term = e_kappa_term(kappa, x, n);
      if (term > 1e-300) worst_term = std::max(worst_term, std::abs(pair - term) / term);
    }
  }
  out.push_back(check(s, "coherent eigen-residual <= 1e-10", worst_residual <= 1e-10, std::to_string(worst_residual)));
  out.push_back(check(s, "coherent normalization within 1e-12", worst_norm <= 1e-12, std::to_string(worst_norm)));
  out.push_back(check(s, "e_k series matches coefficient pairs", worst_term <= 1e-12, std::to_string(worst_term)));

  for (const Rational& kappa : {Rational(1, 3), Rational(2), Rational(5, 7)}) {
    for (auto& c : bargmann_checks(kappa, 60)) {
      c.name += ", k=" + kappa.compact();
      out.push_back(std::move(c));
    }
  }

  GrassmannReport g = grassmann_coherent(GrassmannElement::theta());
  out.push_back(check(s, "Grassmann coherent eigen-equation", g.eigen_equation));
  out.push_back(check(s, "(d_-1)^2 = 0 on span{1, z}", g.difference_nilpotent && g.derivative_reduces));
  return out;
}

std::vector<CheckResult> spectral_suite() {
  const Suite s = Suite::Spectral;
  std::vector<CheckResult> out;
  const std::vector<long> grids{2000, 4000, 8000};
  for (double kappa : {1.0 / 3.0, 2.0 / 5.0}) {
    ConvergenceReport v0 = cs_verify(PotentialFamily::V0, kappa, 5, grids, 40.0);
    ConvergenceReport v1 = cs_verify(PotentialFamily::V1, kappa, 5, grids, 40.0);
    PartnerComparison cmp = compare_partners(v0, v1);
    const std::string k = std::to_string(kappa).substr(0, 6);
    out.push_back(check(s, "V0 levels match 2kn+1, k=" + k, v0.passed));
    out.push_back(check(s, "V1 levels match 2kn+1, k=" + k, v1.passed));
    out.push_back(check(s, "V0/V1 isospectral, k=" + k, cmp.passed, std::to_string(cmp.max_deviation_over_spacing)));
  }
  for (const Rational& kappa : {Rational(1, 3), Rational(2, 5), Rational(4, 5)}) {
    out.push_back(check(s, "V0 branch union equals f+f- spectrum, k=" + kappa.compact(),
                        v0_branch_spectrum(kappa, 6).union_matches_algebraic));
  }
  const std::vector<Rational> gaps = gap_analysis(algebraic_spectrum(SpectrumOperator::PlusMinus, Rational(4, 5), 10));
  bool alternating = true;
  for (std::size_t i = 0; i < gaps.size(); ++i) alternating = alternating && gaps[i] == (i % 2 == 0 ? Rational(1) : Rational(3, 5));
  out.push_back(check(s, "gaps alternate 1, 2k-1 at k=4/5", alternating));
  for (const Rational& kappa : {Rational(1, 3), Rational(2)}) {
    out.push_back(check(s, "spec(f-f+) = spec(f+f-) minus ground state, D=24, k=" + kappa.compact(),
                        isospectral_check(kappa, 24).holds));
  }
  return out;
}

}  // namespace

std::vector<CheckResult> bargmann_checks(const Rational& kappa, long max_degree) {
  if (kappa.sign() <= 0) throw std::domain_error("bargmann checks require kappa > 0");
  if (max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
  const Suite s = Suite::Analytic;
  std::vector<CheckResult> out;
  double worst_up = 0.0, worst_down = 0.0;
  for (long n = 0; n <= max_degree; ++n) {
    const BargmannPoly fn = bargmann_monomial(kappa, n);
    const BargmannPoly up = bargmann_monomial(kappa, n + 1);
    const double s_up = std::sqrt(structure_function_value(kappa, n + 1).to_double());
    const BargmannPoly zf = multiply_by_z(fn);
    for (std::size_t i = 0; i < std::max(zf.size(), up.size()); ++i) {
      const Complex want = s_up * up.coefficient(i);
      worst_up = std::max(worst_up, std::abs(zf.coefficient(i) - want) / std::max(1.0, std::abs(want)));
    }
    const BargmannPoly df = generalized_derivative(kappa, fn);
    const BargmannPoly down = n > 0 ? bargmann_monomial(kappa, n - 1) : BargmannPoly{};
    const double s_down = std::sqrt(structure_function_value(kappa, n).to_double());
    for (std::size_t i = 0; i < std::max(df.size(), down.size()); ++i) {
      const Complex want = s_down * down.coefficient(i);
      worst_down = std::max(worst_down, std::abs(df.coefficient(i) - want) / std::max(1.0, std::abs(want)));
    }
  }
  const std::string range = "n <= " + std::to_string(max_degree);
  out.push_back(check(s, "z f_n = sqrt(F+(n+1)) f_(n+1), " + range, worst_up <= 1e-12, std::to_string(worst_up)));
  out.push_back(check(s, "D f_n = sqrt(F+(n)) f_(n-1), " + range, worst_down <= 1e-12, std::to_string(worst_down)));

  bool fib = true, gen = true;
  for (long deg = 0; deg <= max_degree; ++deg) {
    ExactPoly p{std::vector<Rational>(static_cast<std::size_t>(deg + 1))};
    for (long i = 0; i <= deg; ++i) p.coeffs[static_cast<std::size_t>(i)] = Rational(i * i - 3 * i + 1, i + 2);
    fib = fib && fibonacci_difference(multiply_by_z(p)) + multiply_by_z(fibonacci_difference(p)) == p;
    const ExactPoly lhs = generalized_derivative(kappa, multiply_by_z(p)) + multiply_by_z(generalized_derivative(kappa, p));
    gen = gen && lhs == p + Rational(2) * kappa * euler_operator(p);
  }
  const std::string degrees = "degree <= " + std::to_string(max_degree);
  out.push_back(check(s, "{d_-1, z} = 1, " + degrees, fib));
  out.push_back(check(s, "{D, z} = 1 + 2k z d/dz, " + degrees, gen));
  return out;
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::Algebra:
      return "algebra";
    case Suite::Ordering:
      return "ordering";
    case Suite::Analytic:
      return "analytic";
    case Suite::Spectral:
      return "spectral";
  }
  return "unknown";
}

std::vector<CheckResult> run_suite(Suite suite) {
  switch (suite) {
    case Suite::Algebra:
      return algebra_suite();
    case Suite::Ordering:
      return ordering_suite();
    case Suite::Analytic:
      return analytic_suite();
    case Suite::Spectral:
      return spectral_suite();
  }
  return {};
}

std::vector<CheckResult> run_all(bool parallel) {
  const Suite suites[] = {Suite::Algebra, Suite::Ordering, Suite::Analytic, Suite::Spectral};
  std::vector<CheckResult> out;
  if (parallel) {
    std::vector<std::future<std::vector<CheckResult>>> jobs;
    for (Suite s : suites) jobs.push_back(std::async(std::launch::async, run_suite, s));
    for (auto& job : jobs) {
      auto part = job.get();
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  for (Suite s : suites) {
    auto part = run_suite(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace bkappa
