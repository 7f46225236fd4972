#pragma once

#include <cstdint>
#include <vector>

#include "a2x/geometry.hpp"
#include "a2x/rng.hpp"

// Sampling of the Boolean line-segment building process and of user drop
// points, with seeded, reproducible randomness.

namespace a2x {

/// Parametric scalar distribution used for building lengths and
/// orientations. `uniform_excl_min` draws from the half-open interval
/// (min, max]; `point_mass` always returns `min` (== max).
struct ScalarDist {
    enum class Kind { uniform_excl_min, point_mass };

    Kind kind = Kind::uniform_excl_min;
    double min = 0.0;
    double max = 0.0;

    static ScalarDist uniform(double lo, double hi) {
        return {Kind::uniform_excl_min, lo, hi};
    }
    static ScalarDist point(double v) { return {Kind::point_mass, v, v}; }

    bool is_point() const { return kind == Kind::point_mass; }
    double sample(Xoshiro256pp& rng) const;
    void validate(const char* what) const;
};

struct BuildingProcessParams {
    double density = 2e-4;  // lambda_b, buildings per m^2
    ScalarDist length = ScalarDist::uniform(0.0, 15.0);
    ScalarDist orientation = ScalarDist::uniform(0.0, 3.14159265358979323846);
    double window_radius = 0.0;  // sampling window; must cover the disk plus half a building

    double mean_count() const;
    void validate() const;
};

struct BuildingRealization {
    std::vector<BuildingSegment> buildings;
    std::uint64_t seed = 0;
    double window_radius = 0.0;
};

/// Draws one realization: a Poisson(lambda_b * pi * R_w^2) number of
/// segments with centers uniform in the window disk and i.i.d. lengths and
/// orientations. Bit-identical output for identical (params, seed); each
/// building consumes exactly four uniform draws in the order
/// (center radius, center angle, length, orientation).
BuildingRealization sample_buildings(const BuildingProcessParams& params, std::uint64_t seed);

/// n user positions i.i.d. uniform on the disk of the given radius.
std::vector<Vec2> sample_users(std::int64_t n, double disk_radius, std::uint64_t seed);

}  // namespace a2x
