#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sswme/piecewise_poly.hpp"

namespace sswme {

/// B-splines of degree K on the grid, restricted to [0,1]. The knot vector is
/// the grid extended past both ends by K nodes continuing the boundary
/// spacing; for an equidistant grid these are the cardinal B-splines. Returns
/// M+K-1 functions: nonnegative, partition of unity on [0,1].
std::vector<PiecewisePoly> build_bspline_basis(const Grid& grid, int degree);

/// Zero-mean constrained basis of N functions on [0,1].
struct SplineBasis {
  Grid grid;
  int degree = 1;
  std::vector<PiecewisePoly> functions;  ///< phi_1 ... phi_N
  std::string kind;                      ///< "L2", "Q3", "Legendre2", or "custom"

  int size() const { return static_cast<int>(functions.size()); }
};

/// Constrained splines phi_i = (b_i + mu_i b_{i+1}) / int(b_i) with mu_i fixed
/// by the zero-mean condition; N = M+K-2 functions.
SplineBasis build_constrained_basis(const Grid& grid, int degree);

/// Legendre "basis" run through the same pipeline: phi_i the scaled/shifted
/// Legendre polynomial of degree i, for i = 1..n (global polynomials, M=2 grid).
SplineBasis legendre_basis(int n);

/// Named basis lookup: "L1".."L8" (linear splines, grid M=N+1),
/// "Q2".."Q8" (quadratic splines, grid M=N), "Legendre1".."Legendre8".
/// Throws std::invalid_argument for unknown ids.
SplineBasis named_basis(const std::string& id);

/// Decomposition of a velocity profile into mean + basis expansion.
struct ProfileDecomposition {
  double u_m = 0.0;
  std::vector<double> s;
  double residual_l2 = 0.0;
};

/// Exact least-squares fit of a piecewise-polynomial profile in span{1, phi_i}.
ProfileDecomposition project_profile(const PiecewisePoly& u, const SplineBasis& basis);

/// Quadrature-based fit for a general callable profile (composite Gauss-Legendre
/// with `points_per_segment` nodes on each basis grid segment).
ProfileDecomposition project_profile(const std::function<double(double)>& u,
                                     const SplineBasis& basis,
                                     int points_per_segment = 20);

/// The fast-wave initial velocity profile: piecewise quadratic on
/// {0, 1/3, 2/3, 1} with mean 1/2.
PiecewisePoly steep_initial_profile();

}  // namespace sswme
