#include "bkappa/nsigma_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkappa {

namespace {

using Coeffs = std::vector<KPoly>;

void trim_coeffs(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Coeffs add(const Coeffs& a, const Coeffs& b, bool subtract = false) {
  Coeffs out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (subtract) {
      out[i] -= b[i];
    } else {
      out[i] += b[i];
    }
  }
  trim_coeffs(out);
  return out;
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  trim_coeffs(out);
  return out;
}

// p(N) -> p(N + d) by binomial expansion.
Coeffs shift_poly(const Coeffs& p, long d) {
  if (p.empty() || d == 0) return p;
  Coeffs out(p.size());
  const Rational step(d);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    // (N + d)^i = sum_j C(i, j) d^(i-j) N^j
    Rational binom(1);
    for (std::size_t j = 0; j <= i; ++j) {
      std::size_t jj = i - j;  // walk from N^i downward
      out[jj] += KPoly(binom * step.pow(static_cast<unsigned>(j))) * p[i];
      binom = binom * Rational(static_cast<long>(i - j)) / Rational(static_cast<long>(j + 1));
    }
  }
  trim_coeffs(out);
  return out;
}

KPoly eval_poly(const Coeffs& p, const Rational& n) {
  KPoly acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * KPoly(n) + *it;
  }
  return acc;
}

std::optional<std::size_t> max_degree(const Coeffs& c, std::optional<std::size_t> acc) {
  for (const auto& k : c) {
    auto d = k.degree();
    if (d && (!acc || *d > *acc)) acc = d;
  }
  return acc;
}

std::string poly_text(const Coeffs& p, const std::string& suffix) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    std::string coeff = p[i].to_string();
    std::string monomial;
    if (i == 1) monomial = "N";
    if (i > 1) monomial = "N^" + std::to_string(i);
    monomial += suffix;
    std::string term;
    bool single = p[i].coefficients().size() == 1 || (p[i].coefficients().size() > 1 &&
        std::count_if(p[i].coefficients().begin(), p[i].coefficients().end(),
                      [](const Rational& r) { return !r.is_zero(); }) == 1);
    if (monomial.empty()) {
      term = single ? coeff : "(" + coeff + ")";
    } else if (coeff == "1") {
      term = monomial;
    } else if (coeff == "-1") {
      term = "-" + monomial;
    } else {
      term = (single ? coeff : "(" + coeff + ")") + "*" + monomial;
    }
    if (!out.empty()) {
      if (term.front() == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    } else {
      out = term;
    }
  }
  return out;
}

}  // namespace

NSigmaPoly::NSigmaPoly(std::vector<KPoly> even, std::vector<KPoly> sigma)
    : even_(std::move(even)), sigma_(std::move(sigma)) {
  trim();
}

NSigmaPoly NSigmaPoly::constant(const KPoly& c) { return NSigmaPoly({c}, {}); }
NSigmaPoly NSigmaPoly::number() { return NSigmaPoly({KPoly(), KPoly(1)}, {}); }
NSigmaPoly NSigmaPoly::sigma() { return NSigmaPoly({}, {KPoly(1)}); }
NSigmaPoly NSigmaPoly::kappa() { return constant(KPoly::kappa()); }

std::optional<std::size_t> NSigmaPoly::kappa_degree() const {
  return max_degree(sigma_, max_degree(even_, std::nullopt));
}

std::optional<std::size_t> NSigmaPoly::n_degree() const {
  std::size_t n = std::max(even_.size(), sigma_.size());
  if (n == 0) return std::nullopt;
  return n - 1;
}

NSigmaPoly NSigmaPoly::shifted(long d) const {
  Coeffs sigma = shift_poly(sigma_, d);
  if (d % 2 != 0) {
    for (auto& c : sigma) c = -c;
  }
  return NSigmaPoly(shift_poly(even_, d), std::move(sigma));
}

KPoly NSigmaPoly::at(long n) const {
  if (n < 0) throw std::invalid_argument("NSigmaPoly::at: negative occupation number");
  KPoly even = eval_poly(even_, Rational(n));
  KPoly odd = eval_poly(sigma_, Rational(n));
  return n % 2 == 0 ? even + odd : even - odd;
}

Rational NSigmaPoly::evaluate(const Rational& kappa0, long n) const { return at(n).evaluate(kappa0); }

NSigmaPoly NSigmaPoly::specialize_kappa(const Rational& kappa0) const {
  Coeffs even, sigma;
  for (const auto& c : even_) even.emplace_back(c.evaluate(kappa0));
  for (const auto& c : sigma_) sigma.emplace_back(c.evaluate(kappa0));
  return NSigmaPoly(std::move(even), std::move(sigma));
}

NSigmaPoly NSigmaPoly::operator-() const {
  NSigmaPoly out = *this;
  for (auto& c : out.even_) c = -c;
  for (auto& c : out.sigma_) c = -c;
  return out;
}

NSigmaPoly& NSigmaPoly::operator+=(const NSigmaPoly& rhs) {
  even_ = add(even_, rhs.even_);
  sigma_ = add(sigma_, rhs.sigma_);
  return *this;
}

NSigmaPoly& NSigmaPoly::operator-=(const NSigmaPoly& rhs) {
  even_ = add(even_, rhs.even_, true);
  sigma_ = add(sigma_, rhs.sigma_, true);
  return *this;
}

// (p + q s)(r + t s) = (pr + qt) + (pt + qr) s, using s^2 = 1.
NSigmaPoly operator*(const NSigmaPoly& a, const NSigmaPoly& b) {
  return NSigmaPoly(add(mul(a.even_, b.even_), mul(a.sigma_, b.sigma_)),
                    add(mul(a.even_, b.sigma_), mul(a.sigma_, b.even_)));
}

NSigmaPoly operator*(const KPoly& c, const NSigmaPoly& a) { return NSigmaPoly::constant(c) * a; }

NSigmaPoly& NSigmaPoly::operator*=(const NSigmaPoly& rhs) { return *this = *this * rhs; }

NSigmaPoly NSigmaPoly::pow(unsigned exponent) const {
  NSigmaPoly result = constant(KPoly(1));
  for (unsigned i = 0; i < exponent; ++i) result *= *this;
  return result;
}

std::string NSigmaPoly::to_string() const {
  std::string even = poly_text(even_, "");
  std::string sigma = poly_text(sigma_, "s");
  if (even.empty() && sigma.empty()) return "0";
  if (sigma.empty()) return even;
  if (even.empty()) return sigma;
  if (sigma.front() == '-') return even + " - " + sigma.substr(1);
  return even + " + " + sigma;
}

void NSigmaPoly::trim() {
  trim_coeffs(even_);
  trim_coeffs(sigma_);
}

}  // namespace bkappa
