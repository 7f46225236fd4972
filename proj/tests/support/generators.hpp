#pragma once

#include <cmath>

#include "a2x/geometry.hpp"
#include "a2x/rng.hpp"

// Random scenario/building generators for the property suites. All draws
// come from the library's own seeded streams so every test run is
// reproducible.

namespace a2x::testsupport {

constexpr double kMaxRange = 100.0;

struct GenOptions {
    bool above_rooftop = false;   // force H_a > H_b
    bool inside_disk = false;     // building entirely inside the coverage disk
    bool foot_exterior = false;   // near endpoint realizes the segment minimum distance
};

struct RandomConfig {
    BuildingSegment building;
    ScenarioHeights heights;
    double disk_radius = 0.0;
};

inline RandomConfig random_config(Xoshiro256pp& rng, const GenOptions& opt = {}) {
    constexpr double pi = 3.14159265358979323846;
    RandomConfig cfg;
    for (;;) {
        const double h_u = 10.0 * rng.uniform01();
        const double h_a = h_u + 15.0 + 80.0 * rng.uniform01();
        double h_b;
        if (opt.above_rooftop) {
            h_b = h_u + 1.0 + (h_a - 3.0 - (h_u + 1.0)) * rng.uniform01();
        } else {
            h_b = h_u + 1.0 + 79.0 * rng.uniform01();
        }
        cfg.heights = {h_a, h_u, h_b};
        cfg.disk_radius = effective_radius(kMaxRange, cfg.heights);

        const double len = 0.3 + 14.7 * rng.uniform01();
        const double half = 0.5 * len;
        double dx_lo = half * 1.05 + 0.2;
        double dx_hi = opt.inside_disk ? cfg.disk_radius - half - 0.5 : cfg.disk_radius + 10.0;
        if (dx_hi <= dx_lo) continue;  // disk too small for this building
        const double dx = dx_lo + (dx_hi - dx_lo) * rng.uniform01();

        double omega;
        if (opt.foot_exterior) {
            // The perpendicular foot falls outside the segment iff
            // dx sin(omega) >= len/2.
            const double s_min = std::min(1.0, half * 1.02 / dx);
            const double w_lo = std::asin(s_min);
            omega = w_lo + (pi - 2.0 * w_lo) * rng.uniform01();
        } else {
            omega = 0.02 + (pi - 0.02) * rng.uniform01();
        }
        const double bearing = 2.0 * pi * rng.uniform01();
        cfg.building = {{dx * std::cos(bearing), dx * std::sin(bearing)}, len, omega};
        return cfg;
    }
}

}  // namespace a2x::testsupport
