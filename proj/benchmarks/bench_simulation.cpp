#include <benchmark/benchmark.h>

#include "a2x/analytic.hpp"
#include "a2x/montecarlo.hpp"
#include "a2x/process.hpp"
#include "a2x/scenario.hpp"

using namespace a2x;

static void BM_SampleRealization(benchmark::State& state) {
    Scenario sc;
    const BuildingProcessParams params = sc.process_params();
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_buildings(params, seed++));
    }
}
BENCHMARK(BM_SampleRealization);

static void BM_ConnectivityRealizations(benchmark::State& state) {
    Scenario sc;
    sc.mc.realizations = state.range(0);
    sc.mc.users_per_realization = 500;
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_connectivity(sc, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConnectivityRealizations)->Arg(10)->Arg(100);

static void BM_ConnectivityLowerBound(benchmark::State& state) {
    Scenario sc;
    for (auto _ : state) {
        benchmark::DoNotOptimize(connectivity_lower_bound(sc));
    }
}
BENCHMARK(BM_ConnectivityLowerBound);

BENCHMARK_MAIN();
