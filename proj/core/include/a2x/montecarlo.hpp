#pragma once

#include <cstdint>
#include <span>

#include "a2x/geometry.hpp"
#include "a2x/scenario.hpp"

// Ground-truth estimators: the spatially averaged connectivity probability
// and rejection-sampling area oracles for the closed forms in the geometry
// kernel.

namespace a2x {

struct ConnectivityEstimate {
    double p_hat = 0.0;
    double standard_error = 0.0;
    std::int64_t n_realizations = 0;
    std::int64_t users_per_realization = 0;
    std::uint64_t seed = 0;
};

struct AreaEstimate {
    double area = 0.0;
    double standard_error = 0.0;
    std::int64_t n_samples = 0;
};

/// Monte Carlo estimate of the connectivity probability: for every
/// realization, buildings are sampled over the padded window and users
/// uniformly over the coverage disk; a user counts as connected iff no
/// building blocks its link. The union of shadows is therefore handled
/// exactly. p_hat is the mean of the per-realization connected fractions;
/// the standard error is computed across realizations, since users within
/// one realization share buildings.
///
/// Realizations are independent substreams of scenario.mc.seed and are
/// reduced in index order, so the result is bit-identical for any thread
/// count (threads <= 0 picks the hardware concurrency).
ConnectivityEstimate estimate_connectivity(const Scenario& scenario, int threads = 0);

/// Same estimator with a fixed, injected building set instead of sampled
/// realizations; only the users vary per realization.
ConnectivityEstimate estimate_connectivity_fixed(std::span<const BuildingSegment> buildings,
                                                 const ScenarioHeights& heights,
                                                 double disk_radius,
                                                 const MonteCarloControls& mc, int threads = 0);

/// Rejection-sampling estimate of one building's shadow area: the fraction
/// of uniform disk points whose link is blocked, scaled by the disk area.
/// The standard error follows the binomial proportion.
AreaEstimate shadow_area_oracle(const BuildingSegment& b, const ScenarioHeights& heights,
                                double disk_radius, std::int64_t n_samples, std::uint64_t seed);
AreaEstimate shadow_area_oracle(const DiskObstacle& b, const ScenarioHeights& heights,
                                double disk_radius, std::int64_t n_samples, std::uint64_t seed);

/// Area of the region whose ground ray crosses the building but whose link
/// clears the rooftop; requires the AAP above rooftop height.
AreaEstimate gain_area_oracle(const BuildingSegment& b, const ScenarioHeights& heights,
                              double disk_radius, std::int64_t n_samples, std::uint64_t seed);

}  // namespace a2x
