#pragma once

#include <vector>

#include "sswme/model.hpp"

namespace sswme {

struct SimConfig {
  double x_min = -1.0;
  double x_max = 1.0;
  int nx = 200;
  double t_end = 2.0;
  double cfl = 0.5;
  /// Times at which snapshots are recorded; empty means {t_end}.
  std::vector<double> output_times;

  void validate() const;
  double dx() const { return (x_max - x_min) / nx; }
  double cell_center(int i) const { return x_min + (i + 0.5) * dx(); }
};

/// Cell-averaged conservative states on a periodic grid.
struct StateField {
  double time = 0.0;
  std::vector<StateVec> cells;

  int nx() const { return static_cast<int>(cells.size()); }
};

struct Trajectory {
  std::vector<StateField> snapshots;  ///< initial field first, then output times
  std::vector<double> dt_history;     ///< every accepted time step, in order
};

/// h0(x) = 1 + exp(3 cos(pi (x + 1/2)) - 4): the smooth height bump.
double smooth_wave_height(double x);

/// Smooth wave: h0 with the linear velocity profile u_m = 0.25, alpha_1 = 0.25.
StateField initial_condition_smooth(const SimConfig& config, const Model& model);

/// Fast wave: h0 with the steep piecewise-quadratic velocity profile
/// (x-independent), projected onto the model's basis.
StateField initial_condition_fast(const SimConfig& config, const Model& model);

/// Largest propagation speed over all cells: max over eigenvalues of
/// |Re lambda| + |Im lambda| of the transport matrix.
double max_speed(const Model& model, const StateField& field);

/// One forward-Euler transport step (Rusanov flux, central nonconservative
/// product at arithmetic-mean interface states) followed by the exact
/// semi-implicit friction update. Throws on CFL violation (dt * max_speed > dx)
/// and on non-finite states.
StateField step(const Model& model, const StateField& field, double dt, double dx);

/// Advance to t_end with adaptive dt = cfl * dx / max_speed, capped to hit
/// output times exactly. If dt_schedule is non-null its entries are used
/// verbatim instead (replaying a recorded run on an equivalent model).
Trajectory simulate(const Model& model, const SimConfig& config, StateField ic,
                    const std::vector<double>* dt_schedule = nullptr);

/// Relative L1 error sum|v - ref| / sum|ref|; throws if the reference is
/// identically zero or sizes differ.
double rel_l1_error(const std::vector<double>& v, const std::vector<double>& ref);

/// Per-cell derived fields.
struct MomentFields {
  std::vector<double> h, u_m, alpha1, alpha2;
};
MomentFields moments_of_state(const Model& model, const StateField& field);

}  // namespace sswme
