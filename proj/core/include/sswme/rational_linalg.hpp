#pragma once

#include <stdexcept>
#include <vector>

#include "sswme/rational.hpp"

namespace sswme {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

/// Solves A x = b exactly by Gaussian elimination with nonzero pivoting.
/// Throws std::runtime_error if A is singular.
inline RationalVector solve_rational(RationalMatrix a, RationalVector b) {
  const size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("dimension mismatch");
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::runtime_error("singular rational system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  RationalVector x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// Exact inverse; throws std::runtime_error if singular.
inline RationalMatrix invert_rational(const RationalMatrix& a) {
  const size_t n = a.size();
  RationalMatrix inv(n, RationalVector(n, Rational(0)));
  for (size_t j = 0; j < n; ++j) {
    RationalVector e(n, Rational(0));
    e[j] = 1;
    RationalVector col = solve_rational(a, e);
    for (size_t i = 0; i < n; ++i) inv[i][j] = col[i];
  }
  return inv;
}

}  // namespace sswme
