#include "sswme/experiments.hpp"

#include <stdexcept>

namespace sswme {

Experiment smooth_wave_experiment() {
  Experiment exp;
  exp.name = "smooth";
  exp.params.g = 1.0;
  exp.params.nu = 0.1;
  exp.params.lambda = 0.1;
  exp.sim.x_min = -1.0;
  exp.sim.x_max = 1.0;
  exp.sim.nx = 200;
  exp.sim.t_end = 2.0;
  exp.fast = false;
  return exp;
}

Experiment fast_wave_experiment() {
  Experiment exp = smooth_wave_experiment();
  exp.name = "fast";
  exp.params.nu = 0.0005;
  exp.fast = true;
  return exp;
}

Experiment named_experiment(const std::string& name) {
  if (name == "smooth") return smooth_wave_experiment();
  if (name == "fast") return fast_wave_experiment();
  throw std::invalid_argument("unknown experiment: " + name);
}

StateField experiment_initial(const Experiment& exp, const Model& model) {
  return exp.fast ? initial_condition_fast(exp.sim, model)
                  : initial_condition_smooth(exp.sim, model);
}

ReferenceConfig experiment_reference_config(const Experiment& exp, int nzeta) {
  ReferenceConfig cfg;
  cfg.x_min = exp.sim.x_min;
  cfg.x_max = exp.sim.x_max;
  cfg.nx = exp.sim.nx;
  cfg.nzeta = nzeta;
  cfg.t_end = exp.sim.t_end;
  cfg.cfl = exp.sim.cfl;
  cfg.output_times = exp.sim.output_times;
  cfg.params = exp.params;
  return cfg;
}

ReferenceField experiment_reference_initial(const Experiment& exp,
                                            const ReferenceConfig& config) {
  return exp.fast ? reference_initial_fast(config) : reference_initial_smooth(config);
}

}  // namespace sswme
