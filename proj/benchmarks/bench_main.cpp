#include <benchmark/benchmark.h>

#include "sswme/experiments.hpp"
#include "sswme/fv_solver.hpp"
#include "sswme/hyperbolicity.hpp"
#include "sswme/model.hpp"

namespace {

void BM_TensorAssembly(benchmark::State& state) {
  const std::string id = "Q" + std::to_string(state.range(0));
  const sswme::SplineBasis basis = sswme::named_basis(id);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sswme::compute_tensors(basis));
  }
}
BENCHMARK(BM_TensorAssembly)->Arg(2)->Arg(4)->Arg(6);

void BM_Spectrum(benchmark::State& state) {
  const auto model = sswme::make_model("Q" + std::to_string(state.range(0)),
                                       sswme::PhysicalParams{});
  sswme::StateVec u = sswme::StateVec::Zero(model->dim());
  u(0) = 1.0;
  u(1) = 0.25;
  for (int i = 0; i < model->num_moments(); ++i) u(2 + i) = 0.05 * (i + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sswme::spectrum(model->system_matrix(u)));
  }
}
BENCHMARK(BM_Spectrum)->Arg(2)->Arg(4)->Arg(6);

void BM_SolverStep(benchmark::State& state) {
  const sswme::Experiment exp = sswme::smooth_wave_experiment();
  const auto model = sswme::make_model("Q" + std::to_string(state.range(0)), exp.params);
  const sswme::StateField field = sswme::experiment_initial(exp, *model);
  const double dx = exp.sim.dx();
  const double dt = 0.5 * dx / sswme::max_speed(*model, field);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sswme::step(*model, field, dt, dx));
  }
}
BENCHMARK(BM_SolverStep)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
