#include "sswme/polynomial.hpp"

#include <algorithm>

namespace sswme {

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(k);
  return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
  if (c_.empty()) return Poly();
  std::vector<Rational> a(c_.size() + 1, Rational(0));
  for (size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / Rational(k + 1);
  return Poly(std::move(a));
}

Rational Poly::integrate(const Rational& a, const Rational& b) const {
  const Poly F = antiderivative();
  return F.eval(b) - F.eval(a);
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + o * Rational(-1); }

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
  std::vector<Rational> r(c_);
  for (auto& v : r) v *= s;
  return Poly(std::move(r));
}

Poly shifted_legendre(int n) {
  // Recurrence for shifted Legendre P~_n on [0,1]:
  //   (n+1) P~_{n+1} = (2n+1)(2z-1) P~_n - n P~_{n-1},
  // then flip sign for odd n so every function evaluates to 1 at zeta=0.
  Poly pm1 = Poly::constant(Rational(1));
  if (n == 0) return pm1;
  Poly p = Poly::linear(Rational(-1), Rational(2));
  const Poly x = Poly::linear(Rational(-1), Rational(2));
  for (int k = 1; k < n; ++k) {
    Poly next = (x * p * Rational(2 * k + 1) - pm1 * Rational(k)) * Rational(1, k + 1);
    pm1 = p;
    p = next;
  }
  return (n % 2 == 1) ? p * Rational(-1) : p;
}

}  // namespace sswme
