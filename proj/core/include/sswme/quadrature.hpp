#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace sswme {

/// Gauss-Legendre rule with n points on [-1,1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes by Newton iteration on the Legendre recurrence; exact for
/// polynomials of degree <= 2n-1.
const GaussRule& gauss_legendre_rule(int n);

double gauss_legendre_integrate(const std::function<double(double)>& f, double a,
                                double b, int n);

}  // namespace sswme
