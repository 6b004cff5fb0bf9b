#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sswme/model.hpp"

namespace sswme {

/// Propagation speeds of a system matrix.
struct SpeedSpectrum {
  Eigen::VectorXcd eigenvalues;  ///< sorted by (real part, imaginary part)
  double max_imag = 0.0;         ///< max |Im lambda|

  /// c-values with lambda = u_m + c*sqrt(g*h).
  Eigen::VectorXcd shifted_speeds(double u_m, double g, double h) const;
};

/// Dense nonsymmetric eigen-solve; throws std::invalid_argument on non-finite
/// or non-square input.
SpeedSpectrum spectrum(const Eigen::MatrixXd& a);

/// Default tolerance 1e-9 * max(1, sqrt(g*h)); spurious imaginary parts at
/// repeated real eigenvalues sit far below it. Uses the transport matrix, so
/// a regularized model is classified by its regularized system.
bool is_hyperbolic(const Model& model, const StateVec& u, double tol = -1.0);

/// Affine 2-D slice through scaled-coefficient space: sbar = origin + a*dir1 + b*dir2.
struct SliceDef {
  Eigen::VectorXd origin;
  Eigen::VectorXd dir1;
  Eigen::VectorXd dir2;
};

/// Grid of max|Im c| over a coefficient plane at (h, u_m, g) = (1, 0, 1).
struct HyperbolicityMap {
  std::pair<double, double> range1, range2;
  int n1 = 0, n2 = 0;
  SliceDef slice;
  std::vector<double> max_imag;              ///< row-major, index j*n1 + i
  std::vector<std::uint8_t> on_restriction;  ///< cell straddles the linear-profile line

  double coord1(int i) const;
  double coord2(int j) const;
  double cell(int i, int j) const { return max_imag[static_cast<size_t>(j) * n1 + i]; }
  bool hyperbolic(int i, int j, double tol = 1e-9) const { return cell(i, j) <= tol; }
};

/// Scan a coefficient plane. For N=2 the default slice is the full
/// (sbar_1, sbar_2) plane; for N>=3 a slice must be supplied.
HyperbolicityMap scan_region(const Model& model,
                             std::pair<double, double> range1,
                             std::pair<double, double> range2, int n1, int n2,
                             const std::optional<SliceDef>& slice = std::nullopt);

/// Largest |Im c| along the linear-profile restriction line sbar = alpha1 * w,
/// sampled at `samples` points with alpha1 in [alpha_min, alpha_max].
double restriction_line_max_imag(const Model& model, double alpha_min,
                                 double alpha_max, int samples);

/// Monic characteristic polynomial of the transport matrix at
/// (h, u_m, g) = (1, 0, sbar...), coefficients lowest order first
/// (coeffs[k] multiplies c^k, coeffs back() == 1). Faddeev-LeVerrier.
std::vector<double> shifted_char_poly(const Model& model, const Eigen::VectorXd& sbar);

/// Monic characteristic polynomial of an arbitrary square matrix,
/// lowest order first.
std::vector<double> char_poly(const Eigen::MatrixXd& a);

/// Roots of a polynomial (lowest-order-first coefficients) via the companion
/// matrix; sorted by (real part, imaginary part). Leading zeros are trimmed.
std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs);

}  // namespace sswme
