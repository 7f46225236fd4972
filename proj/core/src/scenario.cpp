#include "a2x/scenario.hpp"

#include "a2x/errors.hpp"

namespace a2x {

double Scenario::max_range() const {
    if (budget && explicit_max_range) {
        throw validation_error("give either a link budget or an explicit r_max, not both");
    }
    if (budget) return a2x::max_range(*budget);
    if (explicit_max_range) {
        if (!(*explicit_max_range > 0.0)) throw validation_error("r_max must be positive");
        return *explicit_max_range;
    }
    throw validation_error("missing link budget / r_max");
}

double Scenario::effective_radius() const {
    return a2x::effective_radius(max_range(), heights);
}

double Scenario::resolved_window_radius() const {
    const double required = effective_radius() + 0.5 * length_dist.max;
    if (!window_radius) return required;
    if (*window_radius < required - 1e-9) {
        throw validation_error(
            "sampling window must cover the coverage disk plus half the longest building");
    }
    return *window_radius;
}

BuildingProcessParams Scenario::process_params() const {
    BuildingProcessParams p;
    p.density = building_density;
    p.length = length_dist;
    p.orientation = orientation_dist;
    p.window_radius = resolved_window_radius();
    return p;
}

void Scenario::validate() const {
    if (budget) budget->validate();
    heights.validate();
    if (!(building_density >= 0.0)) throw validation_error("lambda_b must be >= 0");
    if (mc.realizations < 1) throw validation_error("realization count must be >= 1");
    if (mc.users_per_realization < 1) throw validation_error("users per realization must be >= 1");
    quadrature.validate();
    effective_radius();       // rejects both a missing range source and an empty disk
    process_params().validate();
}

}  // namespace a2x
