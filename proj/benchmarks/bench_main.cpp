#include <benchmark/benchmark.h>

#include "balldep/exact_gaps.hpp"
#include "balldep/exact_roots.hpp"
#include "balldep/montecarlo.hpp"
#include "balldep/process.hpp"

using namespace balldep;

static void BM_PermutationRoots(benchmark::State& state) {
    const auto K = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(sample_final_roots(K, BoundaryMode::Cyclic, rng));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PermutationRoots)->Arg(100)->Arg(1500);

static void BM_FullSimulationRoots(benchmark::State& state) {
    const auto K = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(simulate_final_roots(K, BoundaryMode::Cyclic, rng));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_FullSimulationRoots)->Arg(100)->Arg(1500);

static void BM_GapVector(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto roots = sample_final_roots(1500, BoundaryMode::Cyclic, rng);
    for (auto _ : state) benchmark::DoNotOptimize(gap_vector(roots));
}
BENCHMARK(BM_GapVector);

static void BM_GapTable(benchmark::State& state) {
    const auto gap = static_cast<std::size_t>(state.range(0));
    const auto k_max = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        GapRecursionTable t(gap, k_max);
        benchmark::DoNotOptimize(t.entry_count());
    }
}
BENCHMARK(BM_GapTable)->Args({1, 39})->Args({7, 39})->Args({2, 60})->Unit(benchmark::kMillisecond);

static void BM_RootPgfTable(benchmark::State& state) {
    const auto K = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        RootPgfTable t;
        benchmark::DoNotOptimize(t.aux(K).degree());
    }
}
BENCHMARK(BM_RootPgfTable)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_Ensemble(benchmark::State& state) {
    EnsembleConfig cfg;
    cfg.width = 1500;
    cfg.runs = 2000;
    cfg.statistics.roots = true;
    cfg.statistics.empirical_gap_average = true;
    cfg.keep_samples = false;
    for (auto _ : state) benchmark::DoNotOptimize(run_ensemble(cfg).statistics.size());
}
BENCHMARK(BM_Ensemble)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
