#include <benchmark/benchmark.h>

#include "distvar/elimination_template.h"
#include "distvar/experiment.h"
#include "distvar/models.h"

namespace {

using namespace distvar;

void BM_DistortionDegree(benchmark::State& state) {
  const PrimeField fp;
  const auto id = static_cast<ModelId>(state.range(0));
  const auto ideal = model_ideal<PrimeField>(id, fp);
  const DistortionVector u({0, 0, 1, 0, 0, 1, 1, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(distortion_degree(ideal, u));
  state.SetLabel(std::string(model_info(id).name));
}
BENCHMARK(BM_DistortionDegree)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_DistortionGenerators(benchmark::State& state) {
  const PrimeField fp;
  const auto ideal = model_ideal<PrimeField>(ModelId::kE, fp);
  const DistortionVector u({0, 0, 1, 0, 0, 1, 1, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(distortion_ideal_generators(ideal, u));
}
BENCHMARK(BM_DistortionGenerators)->Unit(benchmark::kMillisecond);

void BM_TwoParameterDegree(benchmark::State& state) {
  const PrimeField fp;
  const auto ideal = model_ideal<PrimeField>(ModelId::kE, fp);
  const auto cfg = std::get<MultiParamConfig>(model_config(ModelId::kE, ConfigKind::kTwoParam));
  for (auto _ : state) benchmark::DoNotOptimize(multi_distortion_degree(ideal, cfg));
}
BENCHMARK(BM_TwoParameterDegree)->Unit(benchmark::kMillisecond);

void BM_BuildTemplate(benchmark::State& state) {
  TemplateOptions opts;
  opts.prune = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_template(opts));
}
BENCHMARK(BM_BuildTemplate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state) {
  const auto& solver = default_solver();
  SolverOptions opts;
  opts.extended_precision = state.range(0) != 0;
  std::vector<Trial> trials;
  for (std::uint64_t i = 0; i < 64; ++i) trials.push_back(generate_trial(SceneConfig{}, i));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solver.solve(trials[k % trials.size()].corrs, opts));
    ++k;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Solve)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_Experiment(benchmark::State& state) {
  SceneConfig cfg;
  cfg.n_trials = static_cast<int>(state.range(0));
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Experiment)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
