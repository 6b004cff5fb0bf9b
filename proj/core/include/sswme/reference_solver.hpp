#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sswme/fv_solver.hpp"
#include "sswme/model.hpp"

namespace sswme {

struct ReferenceConfig {
  double x_min = -1.0;
  double x_max = 1.0;
  int nx = 200;
  int nzeta = 60;  ///< equispaced depth levels zeta_j = j/(nzeta-1)
  double t_end = 2.0;
  double cfl = 0.5;
  std::vector<double> output_times;
  PhysicalParams params;

  void validate() const;
  double dx() const { return (x_max - x_min) / nx; }
  double cell_center(int i) const { return x_min + (i + 0.5) * dx(); }
  double dzeta() const { return 1.0 / (nzeta - 1); }
  double zeta(int j) const { return static_cast<double>(j) / (nzeta - 1); }
};

/// Depth-resolved state: heights per cell and horizontal velocity per cell
/// and depth level (scaled coordinates, zeta = z / h).
struct ReferenceField {
  double time = 0.0;
  std::vector<double> h;  ///< nx
  Eigen::MatrixXd u;      ///< nx rows, nzeta columns

  int nx() const { return static_cast<int>(h.size()); }
  int nzeta() const { return static_cast<int>(u.cols()); }
};

struct ReferenceTrajectory {
  std::vector<ReferenceField> snapshots;  ///< initial field first, then output times
};

ReferenceField reference_initial_smooth(const ReferenceConfig& config);
ReferenceField reference_initial_fast(const ReferenceConfig& config);

/// Trapezoidal depth average of column i.
double depth_average(const ReferenceField& field, int i);

/// Largest admissible dt (before the CFL factor): combines the horizontal
/// wave speed |u| + sqrt(g h) and the vertical mapped transport speed.
double reference_max_dt(const ReferenceField& field, const ReferenceConfig& config);

/// One step of the depth-resolved scheme: Rusanov in x per level, first-order
/// upwind for the vertical coupling (zero at both surfaces), and an implicit
/// tridiagonal solve for vertical viscosity with the slip condition
/// du/dzeta(0) = (h/lambda) u(0) and zero stress at the free surface.
ReferenceField reference_step(const ReferenceField& field,
                              const ReferenceConfig& config, double dt);

ReferenceTrajectory simulate_reference(const ReferenceConfig& config,
                                       ReferenceField ic);

/// Trapezoidal Legendre projections per column:
/// u_m = int u, alpha_1 = 3 int u (1 - 2 zeta), alpha_2 = 5 int u (6 zeta^2 - 6 zeta + 1).
MomentFields moments_of_reference(const ReferenceField& field);

}  // namespace sswme
