#include "a2x/process.hpp"

#include <cmath>

#include "a2x/errors.hpp"

namespace a2x {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double ScalarDist::sample(Xoshiro256pp& rng) const {
    switch (kind) {
        case Kind::point_mass:
            return min;
        case Kind::uniform_excl_min:
        default:
            return rng.uniform_excl_min(min, max);
    }
}

void ScalarDist::validate(const char* what) const {
    if (kind == Kind::point_mass) {
        if (!(min >= 0.0)) throw validation_error(std::string(what) + ": value must be >= 0");
        return;
    }
    if (!(min >= 0.0)) throw validation_error(std::string(what) + ": lower bound must be >= 0");
    if (!(max > min)) throw validation_error(std::string(what) + ": upper bound must exceed lower");
}

double BuildingProcessParams::mean_count() const {
    return density * kPi * window_radius * window_radius;
}

void BuildingProcessParams::validate() const {
    if (!(density >= 0.0)) throw validation_error("building density must be >= 0");
    length.validate("building length distribution");
    orientation.validate("building orientation distribution");
    if (!(orientation.max <= kPi + 1e-12))
        throw validation_error("building orientation must lie in (0, pi]");
    if (!(window_radius > 0.0)) throw validation_error("sampling window radius must be positive");
}

BuildingRealization sample_buildings(const BuildingProcessParams& params, std::uint64_t seed) {
    params.validate();
    BuildingRealization out;
    out.seed = seed;
    out.window_radius = params.window_radius;

    Xoshiro256pp rng = make_stream(seed);
    const std::int64_t count = rng.poisson(params.mean_count());
    out.buildings.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        BuildingSegment b;
        b.center = rng.in_disk(params.window_radius);
        b.length = params.length.sample(rng);
        b.orientation = params.orientation.sample(rng);
        out.buildings.push_back(b);
    }
    return out;
}

std::vector<Vec2> sample_users(std::int64_t n, double disk_radius, std::uint64_t seed) {
    if (n < 1) throw validation_error("user count must be >= 1");
    if (!(disk_radius > 0.0)) throw validation_error("disk radius must be positive");
    std::vector<Vec2> users;
    users.reserve(static_cast<std::size_t>(n));
    Xoshiro256pp rng = make_stream(seed);
    for (std::int64_t i = 0; i < n; ++i) users.push_back(rng.in_disk(disk_radius));
    return users;
}

}  // namespace a2x
