#pragma once

#include <string>

#include "sswme/fv_solver.hpp"
#include "sswme/model.hpp"
#include "sswme/reference_solver.hpp"

namespace sswme {

/// A named simulation setup: physical parameters plus initial data.
struct Experiment {
  std::string name;
  PhysicalParams params;
  SimConfig sim;
  bool fast = false;  ///< steep piecewise-quadratic profile instead of linear
};

/// Traveling wave with the linear initial velocity profile
/// (u_m = 0.25, alpha_1 = 0.25, nu = 0.1, lambda = 0.1, g = 1).
Experiment smooth_wave_experiment();

/// Fast background flow with the steep initial velocity profile
/// (u_m = 0.5, nu = 0.0005, lambda = 0.1, g = 1).
Experiment fast_wave_experiment();

/// Lookup by name: "smooth" or "fast". Throws std::invalid_argument otherwise.
Experiment named_experiment(const std::string& name);

StateField experiment_initial(const Experiment& exp, const Model& model);

ReferenceConfig experiment_reference_config(const Experiment& exp, int nzeta = 60);
ReferenceField experiment_reference_initial(const Experiment& exp,
                                            const ReferenceConfig& config);

}  // namespace sswme
