#include "a2x/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "a2x/process.hpp"
#include "a2x/rng.hpp"
#include "parallel_for.hpp"

namespace a2x {
namespace {

using detail::parallel_for;

constexpr double kPi = 3.14159265358979323846;

// Substream tags within one realization.
constexpr std::uint64_t kTagBuildings = 1;
constexpr std::uint64_t kTagUsers = 2;

// Per-building state reused across users; reproduces los_blocked exactly.
struct PreparedSegment {
    Vec2 near_end;
    Vec2 far_end;
    Vec2 edge;
    double side_o;
};

PreparedSegment prepare(const BuildingSegment& b) {
    const auto [a, c] = b.endpoints();
    const Vec2 e = c - a;
    return {a, c, e, e.cross(Vec2{} - a)};
}

bool blocked_by(const PreparedSegment& s, const Vec2& user, bool above_rooftop, double stretch) {
    const double side_a = user.cross(s.near_end);
    const double side_c = user.cross(s.far_end);
    if (!(side_a * side_c < 0.0)) return false;
    const double side_u = s.edge.cross(user - s.near_end);
    if (!(s.side_o * side_u < 0.0)) return false;
    if (!above_rooftop) return true;
    const double t = s.side_o / (s.side_o - side_u);
    return t * stretch >= 1.0;
}

struct EstimateAccumulator {
    std::vector<double> realization_means;

    ConnectivityEstimate reduce(const MonteCarloControls& mc) const {
        const auto n = static_cast<std::int64_t>(realization_means.size());
        double sum = 0.0;
        for (const double m : realization_means) sum += m;
        const double p = sum / static_cast<double>(n);
        double ss = 0.0;
        for (const double m : realization_means) ss += (m - p) * (m - p);
        const double se =
            n > 1 ? std::sqrt(ss / (static_cast<double>(n) * static_cast<double>(n - 1))) : 0.0;
        return {p, se, n, mc.users_per_realization, mc.seed};
    }
};

double connected_fraction(std::span<const PreparedSegment> segments,
                          std::span<const Vec2> users, bool above_rooftop, double stretch) {
    std::int64_t connected = 0;
    for (const Vec2& u : users) {
        bool blocked = false;
        for (const PreparedSegment& s : segments) {
            if (blocked_by(s, u, above_rooftop, stretch)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) ++connected;
    }
    return static_cast<double>(connected) / static_cast<double>(users.size());
}

}  // namespace

ConnectivityEstimate estimate_connectivity(const Scenario& scenario, int threads) {
    scenario.validate();
    const double lam = scenario.effective_radius();
    const BuildingProcessParams params = scenario.process_params();
    const MonteCarloControls& mc = scenario.mc;
    const ScenarioHeights& h = scenario.heights;
    const bool above = h.aap_above_rooftop();
    const double stretch = above ? h.shadow_stretch() : 0.0;

    EstimateAccumulator acc;
    acc.realization_means.assign(static_cast<std::size_t>(mc.realizations), 0.0);
    parallel_for(mc.realizations, threads, [&](std::int64_t i) {
        const auto idx = static_cast<std::uint64_t>(i);
        const BuildingRealization real =
            sample_buildings(params, substream_seed(mc.seed, idx, kTagBuildings));
        std::vector<PreparedSegment> segs;
        segs.reserve(real.buildings.size());
        for (const BuildingSegment& b : real.buildings) segs.push_back(prepare(b));
        const std::vector<Vec2> users = sample_users(mc.users_per_realization, lam,
                                                     substream_seed(mc.seed, idx, kTagUsers));
        acc.realization_means[static_cast<std::size_t>(i)] =
            connected_fraction(segs, users, above, stretch);
    });
    return acc.reduce(mc);
}

ConnectivityEstimate estimate_connectivity_fixed(std::span<const BuildingSegment> buildings,
                                                 const ScenarioHeights& heights,
                                                 double disk_radius,
                                                 const MonteCarloControls& mc, int threads) {
    heights.validate();
    if (!(disk_radius > 0.0)) throw validation_error("disk radius must be positive");
    if (mc.realizations < 1) throw validation_error("realization count must be >= 1");
    if (mc.users_per_realization < 1) throw validation_error("users per realization must be >= 1");
    const bool above = heights.aap_above_rooftop();
    const double stretch = above ? heights.shadow_stretch() : 0.0;
    std::vector<PreparedSegment> segs;
    segs.reserve(buildings.size());
    for (const BuildingSegment& b : buildings) segs.push_back(prepare(b));

    EstimateAccumulator acc;
    acc.realization_means.assign(static_cast<std::size_t>(mc.realizations), 0.0);
    parallel_for(mc.realizations, threads, [&](std::int64_t i) {
        const std::vector<Vec2> users =
            sample_users(mc.users_per_realization, disk_radius,
                         substream_seed(mc.seed, static_cast<std::uint64_t>(i), kTagUsers));
        acc.realization_means[static_cast<std::size_t>(i)] =
            connected_fraction(segs, users, above, stretch);
    });
    return acc.reduce(mc);
}

namespace {

AreaEstimate area_by_rejection(double disk_radius, std::int64_t n_samples, std::uint64_t seed,
                               const std::function<bool(const Vec2&)>& inside) {
    if (n_samples < 10000) throw validation_error("area oracle needs at least 1e4 samples");
    Xoshiro256pp rng = make_stream(seed);
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < n_samples; ++i) {
        if (inside(rng.in_disk(disk_radius))) ++hits;
    }
    const double frac = static_cast<double>(hits) / static_cast<double>(n_samples);
    const double disk_area = kPi * disk_radius * disk_radius;
    const double se = std::sqrt(frac * (1.0 - frac) / static_cast<double>(n_samples)) * disk_area;
    return {frac * disk_area, se, n_samples};
}

}  // namespace

AreaEstimate shadow_area_oracle(const BuildingSegment& b, const ScenarioHeights& heights,
                                double disk_radius, std::int64_t n_samples, std::uint64_t seed) {
    const PreparedSegment seg = prepare(b);
    const bool above = heights.aap_above_rooftop();
    const double stretch = above ? heights.shadow_stretch() : 0.0;
    return area_by_rejection(disk_radius, n_samples, seed, [&](const Vec2& u) {
        return blocked_by(seg, u, above, stretch);
    });
}

AreaEstimate shadow_area_oracle(const DiskObstacle& b, const ScenarioHeights& heights,
                                double disk_radius, std::int64_t n_samples, std::uint64_t seed) {
    return area_by_rejection(disk_radius, n_samples, seed,
                             [&](const Vec2& u) { return los_blocked(u, b, heights); });
}

AreaEstimate gain_area_oracle(const BuildingSegment& b, const ScenarioHeights& heights,
                              double disk_radius, std::int64_t n_samples, std::uint64_t seed) {
    if (!heights.aap_above_rooftop()) {
        throw validation_error("coverage gain oracle requires the AAP above rooftop height");
    }
    const PreparedSegment seg = prepare(b);
    const double stretch = heights.shadow_stretch();
    // Crossing rays that clear the rooftop: the complement, within the
    // crossing cone, of the blocked region.
    return area_by_rejection(disk_radius, n_samples, seed, [&](const Vec2& u) {
        return blocked_by(seg, u, false, 0.0) && !blocked_by(seg, u, true, stretch);
    });
}

}  // namespace a2x
