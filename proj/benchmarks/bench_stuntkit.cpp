#include <benchmark/benchmark.h>

#include "stuntkit/anthropometry.hpp"
#include "stuntkit/ensemble.hpp"
#include "stuntkit/experiment.hpp"
#include "stuntkit/neighbors.hpp"
#include "stuntkit/resampling.hpp"

using namespace stuntkit;

namespace {

Dataset cohort(std::size_t n, std::uint64_t seed) {
  GrowthReference ref = GrowthReference::builtin();
  Rng rng(seed);
  return synth_cohort(n, {0.86, 0.12, 0.02}, ref, rng);
}

void BM_SynthCohort(benchmark::State& state) {
  GrowthReference ref = GrowthReference::builtin();
  for (auto _ : state) {
    Rng rng(13);
    benchmark::DoNotOptimize(synth_cohort(std::size_t(state.range(0)),
                                          {0.86, 0.12, 0.02}, ref, rng));
  }
}
BENCHMARK(BM_SynthCohort)->Arg(752)->Arg(3000);

void BM_Knn(benchmark::State& state) {
  Dataset ds = cohort(std::size_t(state.range(0)), 7);
  for (auto _ : state) {
    for (std::size_t i = 0; i < ds.rows(); i += 10)
      benchmark::DoNotOptimize(knn_of_row(ds, i, 5, true));
  }
}
BENCHMARK(BM_Knn)->Arg(752);

void BM_SmoteAll(benchmark::State& state) {
  Dataset ds = cohort(752, 11);
  ResamplerConfig cfg;
  for (auto _ : state) {
    Rng rng(17);
    benchmark::DoNotOptimize(smote_all(ds, cfg, rng));
  }
}
BENCHMARK(BM_SmoteAll);

void BM_EditedRadiusSmote(benchmark::State& state) {
  Dataset ds = cohort(752, 11);
  ResamplerConfig cfg;
  for (auto _ : state) {
    Rng rng(17);
    benchmark::DoNotOptimize(edited_radius_smote(ds, cfg, rng));
  }
}
BENCHMARK(BM_EditedRadiusSmote);

void BM_FitForest(benchmark::State& state) {
  Dataset ds = cohort(752, 19);
  for (auto _ : state) {
    Rng rng(23);
    benchmark::DoNotOptimize(fit_forest(ds, std::size_t(state.range(0)), {}, rng));
  }
}
BENCHMARK(BM_FitForest)->Arg(10)->Arg(100);

void BM_PipelineCell(benchmark::State& state) {
  Dataset ds = cohort(752, 29);
  Rng split_rng(31);
  auto split = stratified_split(ds, 0.2, split_rng);
  GridConfig cfg;
  cfg.methods = {MethodKind::Smote};
  cfg.classifiers = {ClassifierKind::Forest};
  for (auto _ : state) {
    Rng rng(37);
    benchmark::DoNotOptimize(run_experiment_grid(split.train, split.test, cfg, rng));
  }
}
BENCHMARK(BM_PipelineCell);

}  // namespace

BENCHMARK_MAIN();
