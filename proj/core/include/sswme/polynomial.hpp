#pragma once

#include <vector>

#include "sswme/rational.hpp"

namespace sswme {

/// Polynomial in the global coordinate zeta with exact rational coefficients,
/// stored lowest degree first. The zero polynomial has an empty coefficient list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& v) { return Poly({v}); }
  /// a + b*zeta
  static Poly linear(const Rational& a, const Rational& b) { return Poly({a, b}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }

  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
  }

  Rational eval(const Rational& x) const;
  double eval(double x) const;

  Poly derivative() const;
  /// Antiderivative with zero constant term.
  Poly antiderivative() const;
  /// Exact integral over [a, b].
  Rational integrate(const Rational& a, const Rational& b) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Scaled and shifted Legendre polynomial of degree n on [0,1], normalized so
/// that the value at zeta=0 equals 1 (phi_1 = 1-2*zeta, phi_2 = 6*zeta^2-6*zeta+1, ...).
/// Gram diagonal: <phi_n, phi_n> = 1/(2n+1).
Poly shifted_legendre(int n);

}  // namespace sswme
