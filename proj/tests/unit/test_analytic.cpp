#include <doctest.h>

#include <cmath>
#include <vector>

#include "a2x/analytic.hpp"
#include "a2x/errors.hpp"
#include "a2x/montecarlo.hpp"
#include "a2x/rng.hpp"
#include "generators.hpp"
#include "reference.hpp"

using namespace a2x;
using namespace a2x::testsupport;

namespace {

Scenario default_scenario() { return Scenario{}; }

}  // namespace

TEST_CASE("integrand edge values") {
    const ScenarioHeights below{30.0, 2.0, 30.0};
    CHECK(blocked_area_upper_integrand(40.0, 0.0, 1.0, below, 96.0) == 0.0);

    // Indicator off at or below rooftop height: plain sector minus the
    // near-distance triangle.
    const BuildingSegment b{{25.0, 0.0}, 6.0, 0.78539816339744830961};
    const BlockageAngles g = blockage_angles(b, below, 96.0);
    const double expect =
        0.5 * (g.theta * 96.0 * 96.0 - g.d_near * g.d_near * std::sin(g.theta));
    CHECK(blocked_area_upper_integrand(25.0, 6.0, 0.78539816339744830961, below, 96.0) ==
          doctest::Approx(expect).epsilon(1e-12));

    // A segment through the origin contributes the worst case.
    CHECK(blocked_area_upper_integrand(0.0, 10.0, 1.0, below, 96.0) ==
          doctest::Approx(0.5 * 3.14159265358979323846 * 96.0 * 96.0));
}

TEST_CASE("integrand dominates the exact shadow area") {
    Xoshiro256pp rng(51);
    for (int i = 0; i < 10000; ++i) {
        const RandomConfig cfg = random_config(rng);
        const double r = cfg.building.center_distance();
        const double upper = blocked_area_upper_integrand(
            r, cfg.building.length, cfg.building.orientation, cfg.heights, cfg.disk_radius);
        // The integrand is evaluated on the canonical radial position, so
        // compare against the same building placed there.
        const BuildingSegment canonical{{r, 0.0}, cfg.building.length,
                                        cfg.building.orientation};
        const double exact = shadow_area_exact(canonical, cfg.heights, cfg.disk_radius);
        CHECK(exact <= upper + 1e-7 * (1.0 + upper));
    }
}

TEST_CASE("zero density disconnects nothing") {
    Scenario sc = default_scenario();
    sc.building_density = 0.0;
    const BoundResult b = connectivity_lower_bound(sc);
    CHECK(b.p_lower == 1.0);
    CHECK(b.raw == 1.0);
    CHECK(b.mean_blocked_area == 0.0);
}

TEST_CASE("one minus the raw bound is exactly linear in density") {
    Scenario sc = default_scenario();
    sc.building_density = 1e-4;
    const BoundResult b1 = connectivity_lower_bound(sc);
    sc.building_density = 3e-4;
    const BoundResult b3 = connectivity_lower_bound(sc);
    CHECK((1.0 - b3.raw) / (1.0 - b1.raw) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("extreme density clips to zero") {
    Scenario sc = default_scenario();
    sc.building_density = 1.0;
    const BoundResult b = connectivity_lower_bound(sc);
    CHECK(b.p_lower == 0.0);
    CHECK(b.raw < 0.0);
}

TEST_CASE("point-mass distributions collapse to the radial integral") {
    Scenario sc = default_scenario();
    sc.length_dist = ScalarDist::point(10.0);
    sc.orientation_dist = ScalarDist::point(1.0);
    const BoundResult b = connectivity_lower_bound(sc);

    const double lam = sc.effective_radius();
    const double integral = simpson(
        [&](double r) {
            return blocked_area_upper_integrand(r, 10.0, 1.0, sc.heights, lam) * r;
        },
        0.0, lam, 200000);
    const double expect = 1.0 - 2.0 * sc.building_density / (lam * lam) * integral;
    CHECK(b.p_lower == doctest::Approx(expect).epsilon(1e-7));
}

TEST_CASE("quadrature stability under tolerance halving") {
    Scenario sc = default_scenario();
    QuadratureSpec coarse = sc.quadrature;
    QuadratureSpec fine = coarse;
    fine.relative_tolerance /= 2.0;
    fine.absolute_tolerance /= 2.0;
    const double a = connectivity_lower_bound(sc, coarse).p_lower;
    const double b = connectivity_lower_bound(sc, fine).p_lower;
    CHECK(std::abs(a - b) <=
          coarse.relative_tolerance * std::max(1.0, std::abs(a)) + coarse.absolute_tolerance);
}

TEST_CASE("nonconvergence reports within budget") {
    Scenario sc = default_scenario();
    QuadratureSpec strict;
    strict.relative_tolerance = 1e-14;
    strict.absolute_tolerance = 1e-16;
    strict.max_subdivisions = 1;
    CHECK_THROWS_AS(connectivity_lower_bound(sc, strict), nonconvergence_error);
}

TEST_CASE("bound is monotone in density and stays below the estimate") {
    Scenario sc = default_scenario();
    sc.mc.realizations = 300;
    sc.mc.users_per_realization = 300;
    sc.mc.seed = 77;
    double previous = 1.0;
    for (const double density : {1e-5, 1e-4, 3e-4}) {
        sc.building_density = density;
        const BoundResult bound = connectivity_lower_bound(sc);
        CHECK(bound.p_lower <= previous + 1e-12);
        previous = bound.p_lower;
        const ConnectivityEstimate est = estimate_connectivity(sc);
        CHECK(bound.p_lower <= est.p_hat + 3.0 * est.standard_error);
    }
}

TEST_CASE("altitude sweep") {
    Scenario sc = default_scenario();
    SUBCASE("single point") {
        const std::vector<double> grid{45.0};
        const AltitudeSweep sweep = sweep_altitude(sc, grid, sc.quadrature);
        REQUIRE(sweep.points.size() == 1);
        CHECK(sweep.best_index == 0);
        CHECK(sweep.points[0].ok());
    }
    SUBCASE("ties break toward the lowest altitude") {
        sc.building_density = 0.0;
        const std::vector<double> grid{40.0, 50.0, 60.0};
        const AltitudeSweep sweep = sweep_altitude(sc, grid, sc.quadrature);
        CHECK(sweep.best_index == 0);
        for (const AltitudePoint& pt : sweep.points) CHECK(pt.bound.p_lower == 1.0);
    }
    SUBCASE("invalid altitudes are marked, not thrown") {
        const std::vector<double> grid{50.0, 150.0};
        const AltitudeSweep sweep = sweep_altitude(sc, grid, sc.quadrature);
        CHECK(sweep.points[0].ok());
        CHECK_FALSE(sweep.points[1].ok());
        CHECK(sweep.best_index == 0);
    }
    SUBCASE("bound rises with altitude at reference parameters") {
        // Climbing clears more rooftops while the blocked fraction of the
        // shrinking disk keeps falling, so the argmax sits at the top of
        // the grid rather than in the interior.
        std::vector<double> grid;
        for (double h = 32.0; h <= 96.0; h += 8.0) grid.push_back(h);
        const AltitudeSweep sweep = sweep_altitude(sc, grid, sc.quadrature);
        REQUIRE(sweep.best_index < sweep.points.size());
        for (std::size_t i = 1; i < sweep.points.size(); ++i) {
            CHECK(sweep.points[i].bound.p_lower >= sweep.points[i - 1].bound.p_lower - 1e-9);
        }
        CHECK(sweep.best_index == sweep.points.size() - 1);
    }
}
