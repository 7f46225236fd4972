#pragma once

#include <cstdint>
#include <optional>

#include "a2x/geometry.hpp"
#include "a2x/process.hpp"
#include "a2x/quadrature.hpp"

namespace a2x {

struct MonteCarloControls {
    std::int64_t realizations = 2000;
    std::int64_t users_per_realization = 500;
    std::uint64_t seed = 0;
};

/// The one immutable input record: heights, link budget (or an explicit
/// maximal range), the building process, and the estimator controls.
/// Default-constructed it matches the reference configuration:
/// R_max = 100 m, H_a = 50 m, H_u = 2 m, H_b = 30 m, lambda_b = 2e-4,
/// lengths uniform (0, 15], orientations uniform (0, pi].
struct Scenario {
    std::optional<LinkBudget> budget;
    std::optional<double> explicit_max_range = 100.0;
    ScenarioHeights heights;
    double building_density = 2e-4;
    ScalarDist length_dist = ScalarDist::uniform(0.0, 15.0);
    ScalarDist orientation_dist = ScalarDist::uniform(0.0, 3.14159265358979323846);
    std::optional<double> window_radius;  // defaults to Lambda_H + max building length / 2
    MonteCarloControls mc;
    QuadratureSpec quadrature;

    double max_range() const;         // requires exactly one of budget / explicit range
    double effective_radius() const;  // Lambda_H; may throw empty_disk_error
    double resolved_window_radius() const;
    BuildingProcessParams process_params() const;

    void validate() const;
};

}  // namespace a2x
