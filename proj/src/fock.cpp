#include "bkappa/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bkappa/structure.hpp"

namespace bkappa {

namespace {

void require_dimension(long dimension) {
  if (dimension < 2) throw std::invalid_argument("Fock truncation needs D >= 2");
}

double sqrt_f(const Rational& kappa, long n) { return std::sqrt(structure_function_value(kappa, n).to_double()); }

Rational product_f(const Rational& kappa, long lo, long hi) {
  Rational p(1);
  for (long i = lo + 1; i <= hi; ++i) p *= structure_function_value(kappa, i);
  return p;
}

}  // namespace

FockMatrix build_operator(FockOperator which, long dimension, const Rational& kappa) {
  require_dimension(dimension);
  if (kappa.sign() < 0) throw std::domain_error("kappa must be >= 0");
  FockMatrix out{dimension, Eigen::MatrixXd::Zero(dimension, dimension), ""};
  // At kappa = 0 the module is {|0>, |1>}; the ladder stops there.
  const long ladder_top = kappa.is_zero() ? 2 : dimension;
  for (long n = 0; n < dimension; ++n) {
    switch (which) {
      case FockOperator::Raise:
        if (n + 1 < ladder_top) out.matrix(n + 1, n) = sqrt_f(kappa, n + 1);
        break;
      case FockOperator::Lower:
        if (n >= 1 && n < ladder_top) out.matrix(n - 1, n) = sqrt_f(kappa, n);
        break;
      case FockOperator::Number:
        out.matrix(n, n) = static_cast<double>(n);
        break;
      case FockOperator::EvenProjector:
        out.matrix(n, n) = n % 2 == 0 ? 1.0 : 0.0;
        break;
      case FockOperator::OddProjector:
        out.matrix(n, n) = n % 2 == 0 ? 0.0 : 1.0;
        break;
    }
  }
  static const char* labels[] = {"f+", "f-", "N", "Pi0", "Pi1"};
  out.label = labels[static_cast<int>(which)];
  return out;
}

FockMatrix build_operator(const NormalForm& nf, long dimension, const Rational& kappa) {
  const Eigen::MatrixXd up = build_operator(FockOperator::Raise, dimension, kappa).matrix;
  const Eigen::MatrixXd down = build_operator(FockOperator::Lower, dimension, kappa).matrix;
  FockMatrix out{dimension, Eigen::MatrixXd::Zero(dimension, dimension), "composite"};
  for (const auto& [key, coeff] : nf.terms()) {
    Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(dimension, dimension);
    for (long n = 0; n < dimension; ++n) diag(n, n) = coeff.evaluate(kappa, n).to_double();
    Eigen::MatrixXd term = diag;
    for (long i = 0; i < key.first; ++i) term = up * term;
    for (long i = 0; i < key.second; ++i) term = term * down;
    out.matrix += term;
  }
  return out;
}

Rational ActionCoefficient::radicand(const Rational& kappa) const { return product_f(kappa, span_lo, span_hi); }

double ActionCoefficient::value(const Rational& kappa) const {
  return rational_part.to_double() * std::sqrt(radicand(kappa).to_double());
}

ExactAction exact_action(const NormalForm& nf, long n, const Rational& kappa) {
  if (n < 0) throw std::invalid_argument("exact_action requires n >= 0");
  if (kappa.sign() <= 0) throw std::domain_error("exact_action requires kappa > 0");
  ExactAction out;
  for (const auto& [key, coeff] : nf.terms()) {
    auto [a, b] = key;
    if (n < b) continue;  // (f-)^b annihilates |n> for n < b
    const long mid = n - b;
    const long m = mid + a;
    // (f-)^b collects sqrt F+ over (mid, n], (f+)^a over (mid, m]; the overlap
    // (mid, min(n, m)] pairs up into a rational factor.
    Rational rational = coeff.evaluate(kappa, mid) * product_f(kappa, mid, std::min(n, m));
    if (rational.is_zero()) continue;
    auto [it, inserted] = out.try_emplace(m, ActionCoefficient{rational, std::min(n, m), std::max(n, m)});
    if (!inserted) {
      it->second.rational_part += rational;
      if (it->second.rational_part.is_zero()) out.erase(it);
    }
  }
  return out;
}

ExactAction exact_word_action(std::span<const Generator> word, long n, const Rational& kappa) {
  if (n < 0) throw std::invalid_argument("exact_word_action requires n >= 0");
  if (kappa.sign() <= 0) throw std::domain_error("exact_word_action requires kappa > 0");
  // crossings[i] counts how often the path used sqrt F+(i).
  std::map<long, long> crossings;
  long state = n;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it == Generator::Raise) {
      ++state;
      ++crossings[state];
    } else {
      if (state == 0) return {};
      ++crossings[state];
      --state;
    }
  }
  Rational rational(1);
  long lo = std::min(n, state), hi = std::max(n, state);
  for (auto [index, count] : crossings) {
    long paired = count / 2;
    Rational f = structure_function_value(kappa, index);
    rational *= f.pow(static_cast<unsigned>(paired));
    const bool odd = count % 2 == 1;
    const bool in_span = index > lo && index <= hi;
    if (odd != in_span) throw std::logic_error("ladder path radicand does not match its span");
  }
  if (rational.is_zero()) return {};
  return {{state, ActionCoefficient{rational, lo, hi}}};
}

std::vector<Rational> algebraic_spectrum(SpectrumOperator which, const Rational& kappa, long levels) {
  if (levels < 1) throw std::invalid_argument("levels must be >= 1");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(levels));
  const long offset = which == SpectrumOperator::PlusMinus ? 0 : 1;
  for (long n = 0; n < levels; ++n) out.push_back(structure_function_value(kappa, n + offset));
  return out;
}

std::vector<Rational> gap_analysis(std::vector<Rational> spectrum) {
  std::sort(spectrum.begin(), spectrum.end());
  std::vector<Rational> gaps;
  for (std::size_t i = 1; i < spectrum.size(); ++i) gaps.push_back(spectrum[i] - spectrum[i - 1]);
  return gaps;
}

IsospectralReport isospectral_check(const Rational& kappa, long dimension) {
  if (kappa.sign() < 0) throw std::domain_error("kappa must be >= 0");
  IsospectralReport report;
  report.kappa = kappa;
  report.dimension = dimension;
  report.fermion_case = kappa.is_zero();
  if (!report.fermion_case && (dimension < 4 || dimension % 2 != 0)) {
    throw std::invalid_argument("isospectral_check requires an even D >= 4");
  }
  require_dimension(dimension);

  // Exact diagonals of the truncated products. The last row of f-f+ is zero
  // because f+ leaves the truncation there.
  const long d = report.fermion_case ? 2 : dimension;
  std::vector<Rational> pm, mp;
  if (report.fermion_case) {
    for (long n = 0; n < d; ++n) {
      pm.push_back(structure_function_value(kappa, n));
      mp.push_back(n + 1 < d ? structure_function_value(kappa, n + 1) : Rational(0));
    }
  } else {
    const NormalForm plus_minus = word_normalize(parse_word("+-"));
    const NormalForm minus_plus = word_normalize(parse_word("-+"));
    auto diagonal = [&](const NormalForm& nf, long n) {
      ExactAction action = exact_action(nf, n, kappa);
      auto it = action.find(n);
      return it == action.end() ? Rational(0) : it->second.rational_part;
    };
    for (long n = 0; n < d; ++n) {
      pm.push_back(diagonal(plus_minus, n));
      mp.push_back(n + 1 < d ? diagonal(minus_plus, n) : Rational(0));
    }
  }
  if (report.fermion_case) {
    report.plus_minus = pm;
    report.minus_plus = mp;
  } else {
    // Drop the ground state of f+f- and the truncation edge of f-f+.
    report.plus_minus.assign(pm.begin() + 1, pm.begin() + (d - 1));
    report.minus_plus.assign(mp.begin(), mp.begin() + (d - 2));
  }
  std::vector<Rational> a = report.plus_minus, b = report.minus_plus;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  report.holds = a == b;
  return report;
}

}  // namespace bkappa
