#include "bkappa/kpoly.hpp"

#include <algorithm>

namespace bkappa {

KPoly::KPoly(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

KPoly::KPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

KPoly KPoly::kappa() { return monomial(Rational(1), 1); }

KPoly KPoly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return KPoly(std::move(coeffs));
}

std::optional<std::size_t> KPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational KPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational KPoly::evaluate(const Rational& kappa) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * kappa + *it;
  }
  return acc;
}

KPoly KPoly::operator-() const {
  KPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

KPoly& KPoly::operator+=(const KPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

KPoly& KPoly::operator-=(const KPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

KPoly operator*(const KPoly& a, const KPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return KPoly(std::move(out));
}

KPoly& KPoly::operator*=(const KPoly& rhs) { return *this = *this * rhs; }

KPoly KPoly::pow(unsigned exponent) const {
  KPoly result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= *this;
  return result;
}

std::string KPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string magnitude = c.abs().compact();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += magnitude;
    } else {
      if (magnitude != "1") out += magnitude;
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

void KPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

}  // namespace bkappa
