#pragma once

#include <vector>

#include "sswme/grid.hpp"
#include "sswme/polynomial.hpp"

namespace sswme {

/// Piecewise polynomial on [0,1]: one Poly per grid segment, in the global
/// zeta monomial convention. Evaluation is right-continuous at interior
/// breakpoints and left-continuous at zeta = 1.
class PiecewisePoly {
 public:
  PiecewisePoly(Grid grid, std::vector<Poly> segments);

  static PiecewisePoly constant(const Rational& v) {
    return PiecewisePoly(Grid::uniform(2), {Poly::constant(v)});
  }
  static PiecewisePoly from_poly(Grid grid, const Poly& p);

  const Grid& grid() const { return grid_; }
  const std::vector<Poly>& segments() const { return segments_; }
  const Poly& segment(int j) const { return segments_.at(j); }
  /// Maximum polynomial degree across segments.
  int degree() const;

  Rational eval(const Rational& x) const { return segments_[grid_.segment_of(x)].eval(x); }
  double eval(double x) const { return segments_[grid_.segment_of(x)].eval(x); }
  double eval_derivative(double x) const {
    return segments_[grid_.segment_of(x)].derivative().eval(x);
  }
  Rational eval_derivative(const Rational& x) const {
    return segments_[grid_.segment_of(x)].derivative().eval(x);
  }

  /// Exact integral over [0,1].
  Rational integral() const;
  /// Exact integral from 0 to x.
  Rational antiderivative(const Rational& x) const;
  double antiderivative(double x) const;

  PiecewisePoly derivative() const;
  /// The continuous function F(x) = int_0^x f, one degree higher.
  PiecewisePoly antiderivative_fn() const;

  /// Exact L2 inner product int_0^1 f*g on the merged grid.
  Rational inner(const PiecewisePoly& o) const;

  PiecewisePoly operator+(const PiecewisePoly& o) const;
  PiecewisePoly operator-(const PiecewisePoly& o) const;
  PiecewisePoly operator*(const PiecewisePoly& o) const;
  PiecewisePoly operator*(const Rational& s) const;

  /// True when value and the first (k-1) derivatives are continuous at every
  /// interior breakpoint (exact rational check).
  bool is_continuous(int k) const;

  /// Rewrites on a refinement of the segment grid that includes all nodes of
  /// `other`'s grid (used to align operands).
  PiecewisePoly refined_to(const Grid& other) const;

 private:
  Grid grid_;
  std::vector<Poly> segments_;
};

}  // namespace sswme
