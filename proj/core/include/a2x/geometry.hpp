#pragma once

#include <optional>
#include <utility>

#include "a2x/errors.hpp"
#include "a2x/vec2.hpp"

// Deterministic computational-geometry kernel for the shadow a single
// height-limited obstacle casts onto the coverage disk of an aerial access
// point, together with closed-form bounds and the altitude optimizer.
//
// Conventions: lengths in meters, angles in radians, areas in m^2. The
// origin o is the AAP ground projection. All functions are pure.

namespace a2x {

/// Normalized link budget. Noise is the thermal noise power divided by the
/// transmit power, so no absolute power level appears anywhere.
struct LinkBudget {
    double beam_gain = 1.0;          // G, linear
    double normalized_noise = 1.0;   // sigma^2 = N0 / P, linear
    double snr_threshold = 1.0;      // gamma, linear
    double pathloss_exponent = 2.0;  // alpha

    void validate() const;  // throws validation_error
};

/// Farthest 3D distance at which the received SNR still meets the
/// threshold: R_max = (G / (sigma^2 gamma))^(1/alpha).
double max_range(const LinkBudget& budget);

struct ScenarioHeights {
    double aap_altitude = 50.0;     // H_a
    double user_height = 2.0;       // H_u
    double building_height = 30.0;  // H_b

    void validate() const;  // H_a > H_u >= 0, H_b > H_u

    bool aap_above_rooftop() const { return aap_altitude > building_height; }

    /// Shadow stretch factor Omega_H = (H_a - H_u) / (H_a - H_b) >= 1.
    /// A ray crossing a rooftop at 2D distance d clears it beyond
    /// d * Omega_H. Defined only for an AAP above the rooftops.
    double shadow_stretch() const;
};

/// Radius of the efficient coverage disk at user height,
/// Lambda_H = sqrt(R_max^2 - (H_a - H_u)^2). Throws empty_disk_error when
/// the AAP is more than R_max above the users.
double effective_radius(double max_range, const ScenarioHeights& heights);

/// One building: a wall of fixed (global) height whose 2D footprint is the
/// line segment of the given length through `center` with orientation
/// `omega` in (0, pi], measured at the center against the direction
/// perpendicular to the center-to-origin line.
struct BuildingSegment {
    Vec2 center;
    double length = 0.0;
    double orientation = 0.0;

    double center_distance() const { return center.norm(); }

    /// Endpoints ordered (near, far) by distance from the origin.
    std::pair<Vec2, Vec2> endpoints() const;
};

struct ChordDistances {
    double d_near;  // distance from o to the nearer endpoint
    double d_far;   // distance to the farther endpoint, capped at the disk radius
};

/// Endpoint distances per the law of cosines,
///   d_near = sqrt(l^2/4 + d_x^2 - d_x l sin w),
///   d_far  = min(Lambda_H, sqrt(l^2/4 + d_x^2 + d_x l sin w)).
/// Throws degenerate_obstacle_error if the segment passes through o.
ChordDistances chord_distances(const BuildingSegment& b, double disk_radius);

/// Per-building blockage geometry derived from the chord distances.
struct BlockageAngles {
    double d_near = 0.0;
    double d_far = 0.0;
    double theta = 0.0;  // angle the (capped) chord subtends at o
    double beta = 0.0;   // polar-form phase of the supporting line, 0 when theta == 0
    std::optional<double> stretch;  // Omega_H, present iff H_a > H_b
};

/// theta = arccos((d_x^2 - l^2/4) / (d_near d_far)), argument clamped to
/// [-1, 1]; beta = arctan((cos theta - d_near/d_far) / sin theta).
BlockageAngles blockage_angles(const BuildingSegment& b, const ScenarioHeights& heights,
                               double disk_radius);

/// Area of the shadow recovered because the AAP flies above the rooftop:
/// the polar integral (1/2) int [Lambda^2 - (Omega d_line(phi))^2]+ dphi
/// over the angular span subtended by the segment, where d_line is the
/// polar equation of the segment's supporting line. Evaluated by adaptive
/// quadrature on the sub-span where the bracket is positive, then clipped
/// to [0, shadow area without the recovery]. Requires H_a > H_b.
double coverage_gain_exact(const BuildingSegment& b, const ScenarioHeights& heights,
                           double disk_radius);

struct AreaBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Closed-form bracket for the coverage gain:
///   lower = (theta/2) [Lambda^2 - (Omega d_far)^2]+,
///   upper = (theta/2) [Lambda^2 - (Omega d_near)^2]+.
/// The upper bound presumes the near endpoint realizes the minimum
/// distance from o to the segment (perpendicular foot outside the
/// segment); for foot-interior segments it can undershoot the exact gain.
AreaBounds coverage_gain_bounds(const BuildingSegment& b, const ScenarioHeights& heights,
                                double disk_radius);

/// Shadow area cast onto the coverage disk:
///   S_b = (1/2)(theta Lambda^2 - d_near d_far sin theta) - [H_a > H_b] S_gain,
/// clipped to [0, (theta/2) Lambda^2]. Zero when the segment lies beyond
/// the disk (d_near >= Lambda_H).
double shadow_area_exact(const BuildingSegment& b, const ScenarioHeights& heights,
                         double disk_radius);

/// Shadow bracket obtained by substituting the opposite gain bound:
/// lower uses the gain upper bound, upper uses the gain lower bound.
AreaBounds shadow_area_bounds(const BuildingSegment& b, const ScenarioHeights& heights,
                              double disk_radius);

/// Altitude maximizing the closed-form gain lower bound for an obstacle
/// whose far chord distance is d_far:
///   H_a* = (d_far^2 (H_b - H_u))^(1/3) + H_b.
double optimal_altitude(double d_far, const ScenarioHeights& heights);

/// Gain lower bound per unit of subtended angle at a candidate altitude:
/// (1/2) [Lambda(H_a)^2 - (Omega(H_a) d_far)^2]+, zero at or below the
/// rooftop. The factor theta/2 of the full bound is altitude-independent
/// wherever the bracket is positive, so argmax matches optimal_altitude.
double altitude_gain_objective(double aap_altitude, double d_far, const ScenarioHeights& heights,
                               double max_range);

/// Dense grid search of altitude_gain_objective over (H_b, H_u + R_max);
/// ties break toward the lowest altitude. Cross-check for optimal_altitude.
double optimal_altitude_search(double d_far, const ScenarioHeights& heights, double max_range,
                               double step = 0.01);

/// Cylindrical building: 2D footprint is a disk of the given diameter.
struct DiskObstacle {
    Vec2 center;
    double diameter = 0.0;
};

/// Shadow of a cylindrical building, footprint included:
///   S_b = (theta/2) Lambda^2 - (t rho - (rho^2/2)(pi - theta)) - [H_a > H_b] S_gain_lb,
/// with rho = diameter/2, tangent length t = sqrt(d_x^2 - rho^2), theta the
/// full angle subtended by the footprint, and the gain term the closed-form
/// lower bound (theta/2) [Lambda^2 - (Omega (d_x + rho))^2]+. Exact for an
/// AAP at or below rooftop height; an upper bound above it. Throws
/// degenerate_obstacle_error when o lies inside the footprint.
double disk_shadow_area(const DiskObstacle& b, const ScenarioHeights& heights, double disk_radius);

/// True iff the link from the AAP to a user at `user` (2D, at user height)
/// is cut by the building: the ground segment o->user properly crosses the
/// footprint at distance d_cross and the link height there is at most H_b,
/// i.e. d_user <= d_cross * Omega_H when the AAP is above the rooftop.
/// Grazing contacts at segment endpoints count as unblocked.
bool los_blocked(const Vec2& user, const BuildingSegment& b, const ScenarioHeights& heights);
bool los_blocked(const Vec2& user, const DiskObstacle& b, const ScenarioHeights& heights);

}  // namespace a2x
