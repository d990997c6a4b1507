#include "bkappa/grassmann.hpp"

#include <stdexcept>

#include "bkappa/bargmann.hpp"

namespace bkappa {

GrassmannElement GrassmannElement::conjugate() const {
  return {std::conj(c_[0]), std::conj(c_[2]), std::conj(c_[1]), std::conj(c_[3])};
}

GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) {
  return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
}

GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) {
  return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]};
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  const auto& x = a.c_;
  const auto& y = b.c_;
  return {x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[0] * y[2] + x[2] * y[0],
          x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]};
}

GrassmannElement inverse_sqrt_one_plus(const GrassmannElement& x) {
  if (!x.is_even() || x.components()[0] != GrassmannElement::Scalar{}) {
    throw std::invalid_argument("expansion needs an even nilpotent argument");
  }
  return GrassmannElement(1.0) - GrassmannElement(0.5) * x;
}

GrassmannReport grassmann_coherent(const GrassmannElement& z) {
  if (!z.is_odd()) throw std::invalid_argument("Grassmann coherent state label must be odd");
  GrassmannReport report;
  report.z = z;
  const GrassmannElement zz = z * z.conjugate();
  const GrassmannElement norm = inverse_sqrt_one_plus(zz);
  report.state = {norm, norm * z};

  // Two-state ladder: f-|1> = |0>, f-|0> = 0; the operator acts on the Fock
  // index and leaves the Grassmann-valued components in place.
  const std::array<GrassmannElement, 2> lowered = {report.state[1], GrassmannElement()};
  const std::array<GrassmannElement, 2> scaled = {z * report.state[0], z * report.state[1]};
  report.eigen_equation = lowered == scaled;
  report.normalization = norm * norm * (GrassmannElement(1.0) + zz) == GrassmannElement(1.0);

  bool nilpotent = true;
  bool reduces = true;
  const ExactPoly basis[] = {ExactPoly{{Rational(1)}}, ExactPoly{{Rational(0), Rational(1)}}};
  for (const auto& p : basis) {
    const ExactPoly once = fibonacci_difference(p);
    nilpotent = nilpotent && fibonacci_difference(once) == ExactPoly{};
    reduces = reduces && generalized_derivative(Rational(0), p) == once;
  }
  report.difference_nilpotent = nilpotent;
  report.derivative_reduces = reduces;
  return report;
}

}  // namespace bkappa
