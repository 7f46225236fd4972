#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "a2x/geometry.hpp"
#include "a2x/quadrature.hpp"
#include "a2x/scenario.hpp"

// Numerical evaluation of the closed-form lower bound on the connectivity
// probability: the mean total shadow area of the building process is an
// upper bound on the blocked fraction (overlaps are double counted), and
// the per-building shadow is replaced by its closed-form upper bound so
// the triple integral over (length, orientation, center radius) is cheap.

namespace a2x {

struct BoundResult {
    double p_lower = 1.0;          // clipped to [0, 1]
    double raw = 1.0;              // pre-clipping value; negative at high density
    double mean_blocked_area = 0.0;  // expected summed shadow-area upper bound, m^2
};

/// Per-building blocked-area upper bound for a segment of the given length
/// and relative orientation centered at radius r:
///   (1/2)(theta Lambda^2 - d_near^2 sin theta) - [H_a > H_b] gain_lower,
/// clipped to >= 0. A segment through the origin contributes the worst
/// case (pi/2) Lambda^2.
double blocked_area_upper_integrand(double r, double length, double orientation,
                                    const ScenarioHeights& heights, double disk_radius);

/// Lower bound on the connectivity probability:
///   p >= 1 - (2 lambda_b / Lambda^2) *
///        int f_L int f_Theta int_0^Lambda S_upper(r, l, w) r dr dw dl,
/// evaluated by nested adaptive quadrature (point-mass distributions skip
/// their dimension). Throws nonconvergence_error if the tolerances cannot
/// be met within the subdivision budget.
BoundResult connectivity_lower_bound(const Scenario& scenario, const QuadratureSpec& quad);

/// Convenience overload using scenario.quadrature.
BoundResult connectivity_lower_bound(const Scenario& scenario);

struct AltitudePoint {
    double aap_altitude = 0.0;
    BoundResult bound;
    std::string error;  // empty on success

    bool ok() const { return error.empty(); }
};

struct AltitudeSweep {
    std::vector<AltitudePoint> points;
    /// Index of the successful point with the largest bound; ties break
    /// toward the lowest altitude. Equals points.size() if all failed.
    std::size_t best_index = 0;
};

/// Evaluates the bound on an altitude grid. Per-point failures are
/// recorded, not thrown.
AltitudeSweep sweep_altitude(const Scenario& scenario, std::span<const double> altitudes,
                             const QuadratureSpec& quad, int threads = 0);

}  // namespace a2x
