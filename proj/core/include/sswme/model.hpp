#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>

#include "sswme/moment_tensors.hpp"
#include "sswme/spline_basis.hpp"

namespace sswme {

struct PhysicalParams {
  double g = 1.0;       ///< gravitational acceleration
  double nu = 0.0;      ///< kinematic viscosity
  double lambda = 0.1;  ///< slip length
  /// d(h_b)/dx as a function of x; empty means flat bottom.
  std::function<double(double)> bottom_slope;
};

/// Conservative state U = (h, h*u_m, h*s_1, ..., h*s_N).
using StateVec = Eigen::VectorXd;

struct Primitive {
  double h;
  double u_m;
  Eigen::VectorXd s;
};

/// Assembled SSWME balance law for one constrained basis. Moment rows carry
/// the mass-matrix inverse, so the evolved system is
///   dU/dt + dF/dx = Q(U) dU/dx + S(U)
/// with identity mass matrix (the explicit per-basis form of the model
/// catalogue). Immutable and shareable across threads.
class Model {
 public:
  Model(SplineBasis basis, PhysicalParams params, bool regularized = false);

  const SplineBasis& basis() const { return basis_; }
  const MomentTensors& tensors() const { return tensors_; }
  const BasisTransform& transform() const { return transform_; }
  const PhysicalParams& params() const { return params_; }
  bool regularized() const { return regularized_; }
  int num_moments() const { return n_; }
  int dim() const { return n_ + 2; }
  const std::string& name() const { return name_; }

  Primitive primitive(const StateVec& u) const;

  StateVec flux(const StateVec& u) const;
  Eigen::MatrixXd nonconservative_matrix(const StateVec& u) const;
  /// Full source P0 - P1 - P2 (signed as it enters dU/dt).
  StateVec friction_source(const StateVec& u, double x = 0.0) const;
  Eigen::MatrixXd system_matrix(const StateVec& u) const;

  /// alpha_1 / alpha_2: Legendre-fit portions of the velocity profile.
  double alpha1(const StateVec& u) const;
  double alpha2(const StateVec& u) const;

  /// Projection onto the linear velocity profile with the same alpha_1.
  StateVec regularize_state(const StateVec& u) const;
  Eigen::MatrixXd regularized_system_matrix(const StateVec& u) const;
  /// regularized_system_matrix when the model is a HSSWME, else system_matrix.
  Eigen::MatrixXd transport_matrix(const StateVec& u) const;

  /// G with d(h v)/dt = -G v for v = (u_m, s): the friction terms are linear
  /// in the velocity variables, enabling an exact implicit update.
  Eigen::MatrixXd friction_matrix(double h) const;

 private:
  SplineBasis basis_;
  MomentTensors tensors_;
  BasisTransform transform_;
  PhysicalParams params_;
  bool regularized_;
  int n_;
  std::string name_;
};

/// Named model: basis id plus regularization flag (e.g. "Q2", regularized=true
/// gives the HSSWME-Q2).
std::shared_ptr<const Model> make_model(const std::string& basis_id,
                                        const PhysicalParams& params,
                                        bool regularized = false);

}  // namespace sswme
