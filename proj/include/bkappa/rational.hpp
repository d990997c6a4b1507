#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace bkappa {

// Exact rational number backed by GMP. Always in lowest terms, denominator > 0.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: integer literals convert
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  // Accepts "p/q", "p" or "-p/q". Decimal text is rejected; see parse_decimal.
  static Rational parse(std::string_view text);
  // Accepts "p/q", integers and finite decimals such as "0.25" or "-1.5e-2",
  // converted exactly (0.4 -> 2/5).
  static Rational parse_decimal(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const;
  double to_double() const { return value_.get_d(); }

  // "p/q" with the slash always present ("3/1", "0/1").
  std::string str() const;
  // "p" for integers, "p/q" otherwise.
  std::string compact() const;

  Rational inverse() const;
  Rational pow(unsigned exponent) const;
  Rational abs() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace bkappa
