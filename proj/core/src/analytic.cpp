#include "a2x/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "parallel_for.hpp"

namespace a2x {
namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

double blocked_area_upper_integrand(double r, double length, double orientation,
                                    const ScenarioHeights& heights, double disk_radius) {
    const BuildingSegment b{{r, 0.0}, length, orientation};
    BlockageAngles g;
    try {
        g = blockage_angles(b, heights, disk_radius);
    } catch (const degenerate_obstacle_error&) {
        return 0.5 * kPi * disk_radius * disk_radius;
    }
    const double lam2 = disk_radius * disk_radius;
    double area = 0.5 * (g.theta * lam2 - g.d_near * g.d_near * std::sin(g.theta));
    if (g.stretch) {
        const double scaled = *g.stretch * g.d_far;
        area -= 0.5 * g.theta * std::max(0.0, lam2 - scaled * scaled);
    }
    return std::max(0.0, area);
}

BoundResult connectivity_lower_bound(const Scenario& scenario, const QuadratureSpec& quad) {
    scenario.validate();
    quad.validate();
    const double lam = scenario.effective_radius();
    const ScenarioHeights heights = scenario.heights;
    const ScalarDist len = scenario.length_dist;
    const ScalarDist ori = scenario.orientation_dist;
    const double rel = quad.relative_tolerance;
    const double abs_tol = quad.absolute_tolerance;
    const int depth = quad.max_subdivisions;

    // Inner integrals run at tighter tolerances so their error does not
    // pollute the outer levels.
    const auto radial = [&](double l, double w) {
        return integrate_adaptive(
            [&heights, lam, l, w](double r) {
                return blocked_area_upper_integrand(r, l, w, heights, lam) * r;
            },
            0.0, lam, rel / 64.0, abs_tol, depth);
    };
    const auto over_orientation = [&](double l) {
        if (ori.is_point()) return radial(l, ori.min);
        const double v = integrate_adaptive([&](double w) { return radial(l, w); }, ori.min,
                                            ori.max, rel / 8.0, abs_tol, depth);
        return v / (ori.max - ori.min);
    };
    double integral = 0.0;
    if (len.is_point()) {
        integral = over_orientation(len.min);
    } else {
        integral = integrate_adaptive([&](double l) { return over_orientation(l); }, len.min,
                                      len.max, rel, abs_tol, depth) /
                   (len.max - len.min);
    }

    BoundResult out;
    out.mean_blocked_area = 2.0 * kPi * scenario.building_density * integral;
    out.raw = 1.0 - 2.0 * scenario.building_density / (lam * lam) * integral;
    out.p_lower = std::clamp(out.raw, 0.0, 1.0);
    return out;
}

BoundResult connectivity_lower_bound(const Scenario& scenario) {
    return connectivity_lower_bound(scenario, scenario.quadrature);
}

AltitudeSweep sweep_altitude(const Scenario& scenario, std::span<const double> altitudes,
                             const QuadratureSpec& quad, int threads) {
    AltitudeSweep sweep;
    sweep.points.resize(altitudes.size());
    detail::parallel_for(static_cast<std::int64_t>(altitudes.size()), threads,
                         [&](std::int64_t i) {
                             const auto idx = static_cast<std::size_t>(i);
                             AltitudePoint& pt = sweep.points[idx];
                             pt.aap_altitude = altitudes[idx];
                             Scenario local = scenario;
                             local.heights.aap_altitude = altitudes[idx];
                             try {
                                 pt.bound = connectivity_lower_bound(local, quad);
                             } catch (const std::exception& e) {
                                 pt.error = e.what();
                             }
                         });
    sweep.best_index = sweep.points.size();
    for (std::size_t i = 0; i < sweep.points.size(); ++i) {
        if (!sweep.points[i].ok()) continue;
        if (sweep.best_index == sweep.points.size() ||
            sweep.points[i].bound.p_lower > sweep.points[sweep.best_index].bound.p_lower) {
            sweep.best_index = i;
        }
    }
    return sweep;
}

}  // namespace a2x
