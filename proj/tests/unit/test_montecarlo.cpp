#include <doctest.h>

#include <cmath>

#include "a2x/errors.hpp"
#include "a2x/geometry.hpp"
#include "a2x/montecarlo.hpp"
#include "a2x/scenario.hpp"

using namespace a2x;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kQuarterPi = 0.78539816339744830961;

const BuildingSegment kRefBuilding{{25.0, 0.0}, 6.0, kQuarterPi};

Scenario fast_scenario() {
    Scenario sc;
    sc.mc.realizations = 200;
    sc.mc.users_per_realization = 200;
    sc.mc.seed = 5;
    return sc;
}

}  // namespace

TEST_CASE("no buildings means full connectivity") {
    Scenario sc = fast_scenario();
    sc.building_density = 0.0;
    const ConnectivityEstimate est = estimate_connectivity(sc);
    CHECK(est.p_hat == 1.0);
    CHECK(est.standard_error == 0.0);
}

TEST_CASE("estimates are reproducible and thread-count independent") {
    const Scenario sc = fast_scenario();
    const ConnectivityEstimate a = estimate_connectivity(sc, 1);
    const ConnectivityEstimate b = estimate_connectivity(sc, 4);
    const ConnectivityEstimate c = estimate_connectivity(sc, 3);
    CHECK(a.p_hat == b.p_hat);
    CHECK(a.standard_error == b.standard_error);
    CHECK(a.p_hat == c.p_hat);

    Scenario other = sc;
    other.mc.seed = 6;
    CHECK(estimate_connectivity(other).p_hat != a.p_hat);
}

TEST_CASE("single injected building matches the closed-form shadow") {
    const ScenarioHeights h{30.0, 2.0, 30.0};
    const double lam = 96.0;
    const double expect = 1.0 - shadow_area_exact(kRefBuilding, h, lam) / (kPi * lam * lam);
    MonteCarloControls mc;
    mc.realizations = 400;
    mc.users_per_realization = 500;
    mc.seed = 11;
    const BuildingSegment one[] = {kRefBuilding};
    const ConnectivityEstimate est = estimate_connectivity_fixed(one, h, lam, mc);
    CHECK(std::abs(est.p_hat - expect) <= 3.0 * est.standard_error);
}

TEST_CASE("standard error shrinks like the root of the realization count") {
    Scenario sc = fast_scenario();
    sc.mc.realizations = 500;
    const ConnectivityEstimate base = estimate_connectivity(sc);
    sc.mc.realizations = 1000;
    const ConnectivityEstimate doubled = estimate_connectivity(sc);
    const double ratio = doubled.standard_error / base.standard_error;
    CHECK(ratio > 0.707 * 0.8);
    CHECK(ratio < 0.707 * 1.2);
}

TEST_CASE("shadow oracle agrees with the closed form") {
    const ScenarioHeights h{30.0, 2.0, 30.0};
    const AreaEstimate est = shadow_area_oracle(kRefBuilding, h, 96.0, 1000000, 42);
    const double exact = shadow_area_exact(kRefBuilding, h, 96.0);
    CHECK(std::abs(est.area - exact) <= 3.0 * est.standard_error);

    SUBCASE("point obstacle blocks nothing") {
        const AreaEstimate zero =
            shadow_area_oracle({{25.0, 0.0}, 0.0, 1.0}, h, 96.0, 20000, 1);
        CHECK(zero.area == 0.0);
    }
    SUBCASE("building beyond the disk blocks nothing") {
        const AreaEstimate zero =
            shadow_area_oracle({{150.0, 0.0}, 6.0, kQuarterPi}, h, 96.0, 20000, 1);
        CHECK(zero.area == 0.0);
    }
    SUBCASE("sample budget is enforced") {
        CHECK_THROWS_AS(shadow_area_oracle(kRefBuilding, h, 96.0, 100, 1), validation_error);
    }
}

TEST_CASE("gain oracle agrees with the quadrature value") {
    const ScenarioHeights h{58.0, 2.0, 30.0};
    const double lam = effective_radius(100.0, h);
    const AreaEstimate est = gain_area_oracle(kRefBuilding, h, lam, 1000000, 42);
    const double exact = coverage_gain_exact(kRefBuilding, h, lam);
    CHECK(std::abs(est.area - exact) <= 3.0 * est.standard_error);

    SUBCASE("vanishes just above the rooftop") {
        const ScenarioHeights low{30.1, 2.0, 30.0};
        const double lam_low = effective_radius(100.0, low);
        CHECK(gain_area_oracle(kRefBuilding, low, lam_low, 20000, 3).area == 0.0);
    }
    SUBCASE("approaches the naive shadow for a very high AAP") {
        const ScenarioHeights sky{1e6, 2.0, 30.0};
        const AreaEstimate high = gain_area_oracle(kRefBuilding, sky, 96.0, 1000000, 7);
        const ScenarioHeights at_roof{30.0, 2.0, 30.0};
        const double naive = shadow_area_exact(kRefBuilding, at_roof, 96.0);
        CHECK(std::abs(high.area - naive) <= 3.0 * high.standard_error);
    }
    SUBCASE("requires the AAP above the rooftop") {
        const ScenarioHeights below{30.0, 2.0, 30.0};
        CHECK_THROWS_AS(gain_area_oracle(kRefBuilding, below, 96.0, 20000, 1), validation_error);
    }
}

TEST_CASE("disk obstacle oracle matches the cylindrical shadow formula") {
    const ScenarioHeights h{30.0, 2.0, 30.0};
    const DiskObstacle d{{25.0, 0.0}, 6.0};
    const AreaEstimate est = shadow_area_oracle(d, h, 96.0, 1000000, 9);
    CHECK(std::abs(est.area - disk_shadow_area(d, h, 96.0)) <= 3.0 * est.standard_error);

    SUBCASE("above the rooftop the formula is an upper bound") {
        const ScenarioHeights above{58.0, 2.0, 30.0};
        const double lam = effective_radius(100.0, above);
        const AreaEstimate mc = shadow_area_oracle(d, above, lam, 1000000, 10);
        CHECK(mc.area <= disk_shadow_area(d, above, lam) + 3.0 * mc.standard_error);
    }
}

TEST_CASE("connectivity degrades with taller buildings") {
    Scenario sc = fast_scenario();
    sc.mc.realizations = 600;
    sc.mc.users_per_realization = 400;
    double previous = 1.1;
    double previous_se = 0.0;
    for (const double h_b : {10.0, 25.0, 40.0}) {
        sc.heights.building_height = h_b;
        const ConnectivityEstimate est = estimate_connectivity(sc);
        const double slack =
            3.0 * std::sqrt(est.standard_error * est.standard_error + previous_se * previous_se);
        CHECK(est.p_hat <= previous + slack);
        previous = est.p_hat;
        previous_se = est.standard_error;
    }
}

TEST_CASE("empty disk propagates from the scenario") {
    Scenario sc = fast_scenario();
    sc.heights.aap_altitude = 150.0;
    CHECK_THROWS_AS(estimate_connectivity(sc), empty_disk_error);
}
