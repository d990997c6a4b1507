#include "bkappa/coherent.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bkappa/fock.hpp"
#include "bkappa/structure.hpp"

namespace bkappa {

namespace {

void require_positive(const Rational& kappa) {
  if (kappa.sign() <= 0) throw std::domain_error("coherent states need kappa > 0");
}

constexpr double kRescaleAbove = 1e150;
constexpr long kMaxTruncation = 200000;

}  // namespace

CoherentState coherent_state(const Rational& kappa, Complex z, double tol) {
  require_positive(kappa);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  const double mu = std::min(1.0, kappa.to_double());
  const double z2 = std::norm(z);
  std::vector<Complex> c{Complex(1.0, 0.0)};
  double sum = 1.0;
  double scale_log = 0.0;  // log of the factor divided out during rescaling
  for (long n = 0;; ++n) {
    const double weight = std::norm(c.back());
    const double q = z2 / (mu * static_cast<double>(n + 1));
    if (z2 == 0.0 || (q < 0.5 && weight * q / (1.0 - q) < tol * sum)) break;
    if (n + 1 >= kMaxTruncation) throw std::runtime_error("coherent state truncation did not converge");
    c.push_back(c.back() * z / std::sqrt(structure_function_value(kappa, n + 1).to_double()));
    sum += std::norm(c.back());
    if (sum > kRescaleAbove) {
      for (auto& v : c) v /= 1e75;
      sum /= 1e150;
      scale_log += std::log(1e150);
    }
  }

  CoherentState state;
  state.kappa = kappa;
  state.z = z;
  state.truncation = static_cast<long>(c.size());
  state.unnormalized_sum = scale_log == 0.0 ? sum : std::exp(std::log(sum) + scale_log);
  const double inv = 1.0 / std::sqrt(sum);
  state.norm_sq = 0.0;
  for (auto& v : c) {
    v *= inv;
    state.norm_sq += std::norm(v);
  }
  state.coefficients = std::move(c);
  return state;
}

double coherent_residual(const CoherentState& state) {
  const long d = std::max<long>(2, state.truncation);
  const Eigen::MatrixXd lower = build_operator(FockOperator::Lower, d, state.kappa).matrix;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
  for (long n = 0; n < state.truncation; ++n) v(n) = state.coefficients[static_cast<std::size_t>(n)];
  Eigen::VectorXcd r = lower.cast<Complex>() * v - state.z * v;
  return r.norm();
}

double recurrence_violation(const CoherentState& state) {
  double worst = 0.0;
  for (std::size_t n = 0; n + 1 < state.coefficients.size(); ++n) {
    const double f = structure_function_value(state.kappa, static_cast<long>(n + 1)).to_double();
    worst = std::max(worst, std::abs(state.z * state.coefficients[n] - std::sqrt(f) * state.coefficients[n + 1]));
  }
  return worst;
}

double log_monomial_norm(const Rational& kappa, long n) {
  require_positive(kappa);
  if (n < 0) throw std::invalid_argument("monomial index must be >= 0");
  const double k2 = 2.0 * kappa.to_double();
  const double a = 1.0 / k2;
  const long m = n / 2;
  const double md = static_cast<double>(m);
  if (n % 2 == 0) return static_cast<double>(2 * m) * std::log(k2) + std::lgamma(md + 1.0) + std::lgamma(a + md);
  return static_cast<double>(2 * m + 1) * std::log(k2) + std::lgamma(md + 1.0) + std::lgamma(a + md + 1.0);
}

Complex closed_form_coefficient(const Rational& kappa, Complex z, long n) {
  if (n == 0) return Complex(std::exp(-0.5 * log_monomial_norm(kappa, 0)), 0.0);
  if (z == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
  const double log_mag = static_cast<double>(n) * std::log(std::abs(z)) - 0.5 * log_monomial_norm(kappa, n);
  return std::polar(std::exp(log_mag), static_cast<double>(n) * std::arg(z));
}

double e_kappa_term(const Rational& kappa, double x, long n) {
  require_positive(kappa);
  const double a = 1.0 / (2.0 * kappa.to_double());
  const double nd = static_cast<double>(n);
  const double log_rest = -std::lgamma(nd + 1.0) - std::lgamma(a + nd + 1.0);
  if (x == 0.0) return n == 0 ? a * std::exp(log_rest) : 0.0;
  return (a + nd + x) * std::exp(2.0 * nd * std::log(x) + log_rest);
}

double e_kappa(const Rational& kappa, double x) {
  require_positive(kappa);
  if (x < 0.0) throw std::domain_error("e_kappa requires x >= 0");
  const double a = 1.0 / (2.0 * kappa.to_double());
  double sum = 0.0;
  for (long n = 0;; ++n) {
    const double term = e_kappa_term(kappa, x, n);
    sum += term;
    // past the peak the term ratio x^2 / (n (a + n)) keeps shrinking
    const double nd = static_cast<double>(n + 1);
    const bool decreasing = x * x < nd * (a + nd);
    if (decreasing && term <= 1e-17 * sum) break;
    if (n > 1000000) throw std::runtime_error("e_kappa series did not converge");
  }
  return sum;
}

}  // namespace bkappa
