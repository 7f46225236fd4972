#include <benchmark/benchmark.h>

#include "a2x/geometry.hpp"
#include "a2x/process.hpp"
#include "a2x/rng.hpp"

using namespace a2x;

namespace {

const ScenarioHeights kHeights{58.0, 2.0, 30.0};
constexpr double kDiskRadius = 82.849260708831917;

std::vector<BuildingSegment> sample_set(std::size_t n) {
    BuildingProcessParams p;
    p.window_radius = kDiskRadius + 7.5;
    std::vector<BuildingSegment> out;
    for (std::uint64_t seed = 0; out.size() < n; ++seed) {
        const BuildingRealization real = sample_buildings(p, seed);
        out.insert(out.end(), real.buildings.begin(), real.buildings.end());
    }
    out.resize(n);
    return out;
}

}  // namespace

static void BM_LosBlocked(benchmark::State& state) {
    const auto buildings = sample_set(64);
    const auto users = sample_users(1024, kDiskRadius, 3);
    std::size_t b = 0;
    std::size_t u = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(los_blocked(users[u], buildings[b], kHeights));
        b = (b + 1) % buildings.size();
        u = (u + 7) % users.size();
    }
}
BENCHMARK(BM_LosBlocked);

static void BM_ShadowAreaExact(benchmark::State& state) {
    const auto buildings = sample_set(64);
    std::size_t b = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(shadow_area_exact(buildings[b], kHeights, kDiskRadius));
        b = (b + 1) % buildings.size();
    }
}
BENCHMARK(BM_ShadowAreaExact);

static void BM_CoverageGainExact(benchmark::State& state) {
    const BuildingSegment b{{25.0, 0.0}, 6.0, 0.78539816339744830961};
    for (auto _ : state) {
        benchmark::DoNotOptimize(coverage_gain_exact(b, kHeights, kDiskRadius));
    }
}
BENCHMARK(BM_CoverageGainExact);
