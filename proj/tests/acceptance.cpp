// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "bkappa/bargmann.hpp"
#include "bkappa/coherent.hpp"
#include "bkappa/fock.hpp"
#include "bkappa/grassmann.hpp"
#include "bkappa/identities.hpp"
#include "bkappa/ordering.hpp"
#include "bkappa/spectral.hpp"
#include "bkappa/structure.hpp"

using namespace bkappa;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

NSigmaPoly one() { return NSigmaPoly::constant(KPoly(1)); }

Outcome defining_relations() {
  IdentityReport r = check_defining_relation();
  return {r.holds, r.holds ? "{f-,f+} - (1 + 2kN) = 0" : r.difference.to_string()};
}

Outcome reordering() {
  for (long n = 1; n <= 8; ++n) {
    for (ReorderSide side : {ReorderSide::LowerThroughRaises, ReorderSide::LowersThroughRaise}) {
      IdentityReport r = reorder_identity_check(n, side);
      if (!r.holds) return {false, r.name + ": " + r.difference.to_string()};
    }
  }
  return {true, "both identities, n = 1..8"};
}

Outcome structure_function() {
  const NSigmaPoly closed = structure_function_poly();
  for (long n = 0; n <= 200; ++n) {
    const KPoly f = structure_function_symbolic(n);
    const KPoly split = n % 2 == 0 ? KPoly::monomial(Rational(n), 1) : KPoly(1) + KPoly::monomial(Rational(n - 1), 1);
    if (structure_function_symbolic(n + 1) + f != KPoly(1) + KPoly::monomial(Rational(2 * n), 1)) {
      return {false, "recursion fails at n=" + std::to_string(n)};
    }
    if (structure_function_alternating(n) != f) return {false, "alternating sum fails at n=" + std::to_string(n)};
    if (closed.at(n) != split || f != split) return {false, "closed form fails at n=" + std::to_string(n)};
  }
  return {true, "recursion, alternating sum, closed form, n <= 200"};
}

Outcome grading_and_bosonization() {
  IdentityReport graded = check_graded_commutator();
  if (!graded.holds) return {false, "[f-,f+] residual " + graded.difference.to_string()};
  Bosonization b = bosonize();
  if (b.commutator != bosonic_commutator_expected()) return {false, "[X-,X+] = " + b.commutator.to_string()};
  const NSigmaPoly k = NSigmaPoly::kappa(), n = NSigmaPoly::number();
  const NSigmaPoly oracle = k * k * n * (n - one()) + k * (one() - k) * n - k * (one() - k) * projector(Parity::Odd);
  DiscrepancyReport audit = compare_with_paper(4);
  for (const auto& e : audit.entries) {
    if (e.entry != "F(N) bosonized") continue;
    if (e.agree) return {false, "audit does not flag the printed F(N)"};
    if (e.computed != oracle) return {false, "audit F(N) = " + e.computed.to_string()};
    return {true, "graded commutator, [X-,X+] = 2k(2kN+1), F(N) verdict disagree"};
  }
  return {false, "audit has no F(N) entry"};
}

Outcome normal_ordering() {
  for (long r = 1; r <= 6; ++r) {
    if (!wick_verify(stirling(r), 40).holds) return {false, "Wick identity fails for r=" + std::to_string(r)};
  }
  std::map<std::string, bool> verdict;
  for (const auto& e : compare_with_paper(4).entries) verdict[e.entry] = e.agree;
  for (const char* name : {"S(1,1)", "S(2,1)", "S(2,2)", "S(3,1)"}) {
    if (!verdict.count(name) || !verdict[name]) return {false, std::string("expected agreement on ") + name};
  }
  for (const char* name : {"S(3,2)", "S(3,3)", "S(4,2)", "S(4,3)", "S(4,4)", "B(3)", "B(4)"}) {
    if (!verdict.count(name) || verdict[name]) return {false, std::string("expected disagreement on ") + name};
  }
  return {true, "Wick r = 1..6, n <= 40; audit verdicts as expected"};
}

Outcome bell_pattern() {
  if (bell_limit_kappa0(1) != Rational(1) || bell_limit_kappa0(2) != Rational(0)) return {false, "B1 or B2 wrong"};
  for (long r = 3; r <= 12; ++r) {
    const long m = r % 3;
    const Rational expected = m == 2 ? Rational(0) : Rational((m == 0) == (r % 2 == 0) ? 1 : -1);
    if (bell_limit_kappa0(r) != expected) return {false, "B" + std::to_string(r) + " = " + bell_limit_kappa0(r).compact()};
  }
  return {true, "B1 = 1, B2 = 0, mod-3 pattern r = 3..12"};
}

Outcome coherent_states() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> kappa_num(1, 300);
  std::uniform_real_distribution<double> radius(0.0, 2.0), angle(0.0, 2.0 * M_PI);
  double worst_residual = 0.0, worst_norm = 0.0, worst_term = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Rational kappa(kappa_num(rng), 100);
    const Complex z = std::polar(radius(rng), angle(rng));
    CoherentState st = coherent_state(kappa, z, 1e-24);
    worst_residual = std::max(worst_residual, coherent_residual(st));
    worst_norm = std::max(worst_norm, std::abs(st.norm_sq - 1.0));
    // Pairs of recurrence coefficients with c0 = 1 against the e_k series terms.
    const double gamma_a = std::tgamma(1.0 / (2.0 * kappa.to_double()));
    const double x = std::norm(z) / (2.0 * kappa.to_double());
    const Complex c0 = st.coefficients[0];
    for (std::size_t n = 0; 2 * n + 1 < st.coefficients.size(); ++n) {
      const double pair = std::norm(st.coefficients[2 * n] / c0) + std::norm(st.coefficients[2 * n + 1] / c0);
      const double term = gamma_a * e_kappa_term(kappa, x, static_cast<long>(n));
      if (term > 1e-300) worst_term = std::max(worst_term, std::abs(pair - term) / term);
    }
  }
  const bool ok = worst_residual <= 1e-10 && worst_norm <= 1e-12 && worst_term <= 1e-12;
  return {ok, "max residual " + fmt(worst_residual) + ", max |norm-1| " + fmt(worst_norm) + ", max term error " +
                  fmt(worst_term)};
}

Outcome bargmann() {
  double worst = 0.0;
  for (const Rational& kappa : {Rational(1, 3), Rational(1, 2), Rational(2), Rational(5, 7)}) {
    for (long n = 0; n <= 60; ++n) {
      const BargmannPoly fn = bargmann_monomial(kappa, n);
      const BargmannPoly up = bargmann_monomial(kappa, n + 1);
      const BargmannPoly zf = multiply_by_z(fn);
      const double s_up = std::sqrt(structure_function_value(kappa, n + 1).to_double());
      for (std::size_t i = 0; i < std::max(zf.size(), up.size()); ++i) {
        const Complex want = s_up * up.coefficient(i);
        worst = std::max(worst, std::abs(zf.coefficient(i) - want) / std::max(1.0, std::abs(want)));
      }
      const BargmannPoly df = generalized_derivative(kappa, fn);
      const BargmannPoly down = n > 0 ? bargmann_monomial(kappa, n - 1) : BargmannPoly{};
      const double s_down = std::sqrt(structure_function_value(kappa, n).to_double());
      for (std::size_t i = 0; i < std::max(df.size(), down.size()); ++i) {
        const Complex want = s_down * down.coefficient(i);
        worst = std::max(worst, std::abs(df.coefficient(i) - want) / std::max(1.0, std::abs(want)));
      }
    }
  }
  if (worst > 1e-12) return {false, "ladder mismatch " + fmt(worst)};

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
  for (const Rational& kappa : {Rational(1, 3), Rational(3, 7), Rational(2)}) {
    for (long degree = 0; degree <= 30; ++degree) {
      ExactPoly p;
      for (long i = 0; i <= degree; ++i) p.coeffs.emplace_back(num(rng), den(rng));
      if (fibonacci_difference(multiply_by_z(p)) + multiply_by_z(fibonacci_difference(p)) != p) {
        return {false, "{d_-1, z} != 1 at degree " + std::to_string(degree)};
      }
      const ExactPoly lhs = generalized_derivative(kappa, multiply_by_z(p)) + multiply_by_z(generalized_derivative(kappa, p));
      if (lhs != p + (Rational(2) * kappa) * euler_operator(p)) {
        return {false, "{D, z} mismatch at degree " + std::to_string(degree)};
      }
    }
  }
  return {true, "ladder actions n <= 60 (max " + fmt(worst) + "), exact anticommutators degree <= 30"};
}

Outcome grassmann_limit() {
  GrassmannReport r = grassmann_coherent(GrassmannElement::theta());
  if (!r.eigen_equation) return {false, "f-|z> != z|z>"};
  if (!r.difference_nilpotent) return {false, "(d_-1)^2 != 0"};
  return {true, "f-|theta> = theta|theta>, (d_-1)^2 = 0"};
}

Outcome calogero() {
  const std::vector<long> grids{2000, 4000, 8000};
  std::ostringstream detail;
  bool ok = true;
  for (double kappa : {1.0 / 3.0, 2.0 / 5.0}) {
    ConvergenceReport v0 = cs_verify(PotentialFamily::V0, kappa, 5, grids, 40.0, 5e-3);
    ConvergenceReport v1 = cs_verify(PotentialFamily::V1, kappa, 5, grids, 40.0, 5e-3);
    PartnerComparison partners = compare_partners(v0, v1, 5e-3);
    double worst = 0.0;
    for (const auto* rep : {&v0, &v1}) {
      for (const auto& level : rep->levels) worst = std::max(worst, level.relative_error);
    }
    ok = ok && v0.passed && v1.passed && partners.passed && worst <= 5e-3 &&
         partners.max_deviation_over_spacing <= 5e-3;
    detail << "k=" << fmt(kappa) << ": max rel " << fmt(worst) << ", partner " << fmt(partners.max_deviation_over_spacing)
           << "; ";
  }
  std::string text = detail.str();
  text.resize(text.size() - 2);
  return {ok, text};
}

Outcome gap_claim() {
  const auto gaps = gap_analysis(algebraic_spectrum(SpectrumOperator::PlusMinus, Rational(4, 5), 10));
  if (gaps.size() != 9) return {false, "expected 9 gaps"};
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] != (i % 2 == 0 ? Rational(1) : Rational(3, 5))) return {false, "gap " + std::to_string(i) + " = " + gaps[i].compact()};
  }
  return {true, "gaps 1, 3/5 alternate over 10 levels"};
}

Outcome isospectrality() {
  for (const Rational& kappa : {Rational(1, 3), Rational(2)}) {
    if (!isospectral_check(kappa, 24).holds) return {false, "fails at k=" + kappa.compact()};
  }
  return {true, "D = 24, k = 1/3 and 2"};
}

struct Criterion {
  int id;
  std::string name;
  double time_limit;  // seconds; 0 means none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "defining relations", 1.0, defining_relations},
      {2, "reordering identities", 5.0, reordering},
      {3, "structure function", 0.0, structure_function},
      {4, "Z2 grading and bosonization", 0.0, grading_and_bosonization},
      {5, "normal ordering", 30.0, normal_ordering},
      {6, "Bell pattern at k = 0", 0.0, bell_pattern},
      {7, "coherent states", 10.0, coherent_states},
      {8, "Bargmann calculus", 0.0, bargmann},
      {9, "Grassmann limit", 0.0, grassmann_limit},
      {10, "Calogero-Sutherland spectra", 60.0, calogero},
      {11, "gap claim", 0.0, gap_claim},
      {12, "isospectrality", 0.0, isospectrality},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && seconds > c.time_limit) {
      out.passed = false;
      out.detail += "; exceeded " + fmt(c.time_limit) + " s";
    }
    if (!out.passed) ++failures;
    std::printf("[%s] criterion %d: %s (%s; %.3f s)\n", out.passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                out.detail.c_str(), seconds);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
