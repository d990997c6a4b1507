#pragma once

#include <array>
#include <complex>

namespace bkappa {

// Element of the Grassmann algebra on theta and its conjugate thetabar:
// c0 + c1 theta + c2 thetabar + c3 theta thetabar, with theta^2 = thetabar^2 = 0
// and thetabar theta = -theta thetabar.
class GrassmannElement {
 public:
  using Scalar = std::complex<double>;

  GrassmannElement() = default;
  GrassmannElement(Scalar c0, Scalar c1 = {}, Scalar c2 = {}, Scalar c3 = {}) : c_{c0, c1, c2, c3} {}  // NOLINT

  static GrassmannElement theta(Scalar b = 1.0) { return {0.0, b, 0.0, 0.0}; }
  static GrassmannElement theta_bar(Scalar b = 1.0) { return {0.0, 0.0, b, 0.0}; }

  const std::array<Scalar, 4>& components() const { return c_; }
  bool is_odd() const { return c_[0] == Scalar{} && c_[3] == Scalar{}; }
  bool is_even() const { return c_[1] == Scalar{} && c_[2] == Scalar{}; }
  bool is_zero() const { return *this == GrassmannElement(); }

  // Complex conjugation with theta <-> thetabar; (theta thetabar)* = theta thetabar.
  GrassmannElement conjugate() const;

  friend GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;

 private:
  std::array<Scalar, 4> c_{};
};

// (1 + x)^(-1/2) for x even and nilpotent (x^2 = 0): 1 - x/2.
GrassmannElement inverse_sqrt_one_plus(const GrassmannElement& x);

struct GrassmannReport {
  GrassmannElement z;
  std::array<GrassmannElement, 2> state;  // components on |0>, |1>
  bool eigen_equation = false;            // f-|z> == z|z>
  bool normalization = false;             // N^2 (1 + z zbar) == 1
  bool difference_nilpotent = false;      // (d_{-1})^2 == 0 on span{1, z}
  bool derivative_reduces = false;        // D at kappa = 0 equals d_{-1} on span{1, z}
};

// Coherent state (1 + z zbar)^(-1/2) (|0> + z|1>) of the two-state (kappa = 0)
// Fock module with an odd Grassmann label. Throws std::invalid_argument if z
// carries an even part.
GrassmannReport grassmann_coherent(const GrassmannElement& z);

}  // namespace bkappa
