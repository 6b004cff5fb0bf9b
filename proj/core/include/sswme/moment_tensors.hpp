#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sswme/rational_linalg.hpp"
#include "sswme/spline_basis.hpp"

namespace sswme {

/// Galerkin tensors of a constrained basis:
///   M_ij   = <phi_i, phi_j>
///   V0_i   = phi_i(0)
///   C_ij   = <phi_i', phi_j'>
///   A_ijk  = <phi_i phi_j, phi_k>
///   B_ijk  = int phi_i' (int_0^z phi_j) phi_k dz
/// Exact rationals plus double views; the *hat members carry the moment-block
/// mass inverse M^{-1} contracted into the first index.
struct MomentTensors {
  int n = 0;

  RationalMatrix gram_rat;
  RationalMatrix dgram_rat;
  RationalVector bottom_rat;
  std::vector<RationalMatrix> triple_rat;     // A[i][j][k]
  std::vector<RationalMatrix> advection_rat;  // B[i][j][k]

  Eigen::MatrixXd M, C, Minv;
  Eigen::VectorXd V0;
  std::vector<Eigen::MatrixXd> A, B;        // i -> (j,k) slice
  std::vector<Eigen::MatrixXd> Ahat, Bhat;  // (M^{-1} T)_{ijk}
  Eigen::VectorXd V0hat;                    // M^{-1} V0
  Eigen::MatrixXd Chat;                     // M^{-1} C
};

MomentTensors compute_tensors(const SplineBasis& basis);

/// Piecewise Gauss-Legendre evaluation of the same integrals in doubles;
/// independent route used to cross-check polynomial exactness.
struct QuadratureTensors {
  Eigen::MatrixXd M, C;
  Eigen::VectorXd V0;
  std::vector<Eigen::MatrixXd> A, B;
};
QuadratureTensors compute_tensors_quadrature(const SplineBasis& basis, int order);

/// M^{LS}_ij = <phi_i^Leg, phi_j> for i = 1..degree_n (empty for degree_n = 0).
RationalMatrix legendre_crossgram(const SplineBasis& basis, int degree_n);

/// Spline <-> Legendre transformation data.
struct BasisTransform {
  bool valid_square = false;   ///< N functions of piecewise degree N, no interior node
  Eigen::MatrixXd T;           ///< square case: phi^Leg = T phi^S
  Eigen::MatrixXd Tinv;
  RationalMatrix T_rat;
  Eigen::VectorXd alpha_row;       ///< alpha_1 = alpha_row . s  (= 3<phi_j, phi_1^Leg>)
  Eigen::VectorXd alpha2_row;      ///< alpha_2 = alpha2_row . s (= 5<phi_j, phi_2^Leg>)
  Eigen::VectorXd linear_profile;  ///< w: the linear profile alpha_1 phi_1^Leg is sum w_i alpha_1 phi_i
  RationalVector linear_profile_rat;
};

BasisTransform basis_transform(const SplineBasis& basis);

}  // namespace sswme
