#include "a2x/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "a2x/quadrature.hpp"

namespace a2x {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Tolerance used when clamping arccos arguments and detecting degeneracies.
constexpr double kEps = 1e-12;

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

double point_segment_distance(const Vec2& a, const Vec2& b) {
    const Vec2 e = b - a;
    const double len2 = e.norm2();
    if (len2 <= 0.0) return a.norm();
    const double t = std::clamp(-a.dot(e) / len2, 0.0, 1.0);
    return (a + t * e).norm();
}

void reject_degenerate(const BuildingSegment& b) {
    const auto [q, p] = b.endpoints();
    const double scale = std::max({1.0, b.center_distance(), b.length});
    if (point_segment_distance(q, p) <= kEps * scale) {
        throw degenerate_obstacle_error(
            "building segment passes through the AAP ground projection");
    }
}

// Shadow area ignoring any rooftop clearance: disk sector minus the
// triangle spanned by the two chord endpoints.
double naive_shadow(const BlockageAngles& g, double disk_radius) {
    const double v =
        0.5 * (g.theta * disk_radius * disk_radius - g.d_near * g.d_far * std::sin(g.theta));
    return std::max(0.0, v);
}

// Polar description of the segment's supporting line as seen from o:
// d_line(phi) = foot_distance / cos(phi - foot_angle), with phi measured
// from the ray through the near endpoint, increasing toward the far one.
struct SupportingLine {
    double foot_distance;
    double foot_angle;
};

std::optional<SupportingLine> supporting_line(const BuildingSegment& b) {
    const auto [q, p] = b.endpoints();
    const Vec2 e = p - q;
    const double len = e.norm();
    if (len <= kEps) return std::nullopt;  // point obstacle
    const double perp = std::abs(q.cross(p)) / len;
    if (perp <= kEps * std::max(1.0, b.center_distance())) return std::nullopt;  // radial
    const double sweep_sign = q.cross(p) > 0.0 ? 1.0 : -1.0;
    const Vec2 foot = q + (-q.dot(e) / (len * len)) * e;
    const double ang = std::atan2(sweep_sign * q.cross(foot), q.dot(foot));
    return SupportingLine{perp, ang};
}

double gain_exact_impl(const BuildingSegment& b, const BlockageAngles& g, double stretch,
                       double disk_radius) {
    if (g.d_near >= disk_radius || g.theta <= 0.0) return 0.0;
    const auto line = supporting_line(b);
    if (!line) return 0.0;

    const double scaled_foot = stretch * line->foot_distance;
    const double c = scaled_foot / disk_radius;
    if (c >= 1.0) return 0.0;  // the stretched shadow never clears the disk

    // Sub-span of [0, theta] where stretch * d_line(phi) < Lambda_H.
    const double half_width = std::acos(c);
    const double lo = std::max(0.0, line->foot_angle - half_width);
    const double hi = std::min(g.theta, line->foot_angle + half_width);
    if (hi <= lo) return 0.0;

    const double lam2 = disk_radius * disk_radius;
    const double foot_angle = line->foot_angle;
    const auto integrand = [&](double phi) {
        const double d = scaled_foot / std::cos(phi - foot_angle);
        return 0.5 * std::max(0.0, lam2 - d * d);
    };
    const double area = integrate_adaptive(integrand, lo, hi, 1e-12, 1e-10, 200);
    return std::clamp(area, 0.0, naive_shadow(g, disk_radius));
}

void require_above_rooftop(const ScenarioHeights& h, const char* op) {
    if (!h.aap_above_rooftop()) {
        throw validation_error(std::string(op) + " requires the AAP above rooftop height");
    }
}

}  // namespace

void LinkBudget::validate() const {
    if (!(beam_gain > 0.0)) throw validation_error("beam gain must be positive");
    if (!(normalized_noise > 0.0)) throw validation_error("normalized noise must be positive");
    if (!(snr_threshold > 0.0)) throw validation_error("SNR threshold must be positive");
    if (!(pathloss_exponent >= 1.0)) throw validation_error("pathloss exponent must be >= 1");
    if (!std::isfinite(max_range(*this))) throw validation_error("link budget gives infinite range");
}

double max_range(const LinkBudget& budget) {
    return std::pow(budget.beam_gain / (budget.normalized_noise * budget.snr_threshold),
                    1.0 / budget.pathloss_exponent);
}

void ScenarioHeights::validate() const {
    if (!(user_height >= 0.0)) throw validation_error("user height must be >= 0");
    if (!(aap_altitude > user_height)) throw validation_error("AAP must fly above the users");
    if (!(building_height > user_height))
        throw validation_error("buildings must be taller than the users");
}

double ScenarioHeights::shadow_stretch() const {
    if (!aap_above_rooftop())
        throw validation_error("shadow stretch is defined only for an AAP above rooftop height");
    return (aap_altitude - user_height) / (aap_altitude - building_height);
}

double effective_radius(double max_range, const ScenarioHeights& heights) {
    const double rise = heights.aap_altitude - heights.user_height;
    if (rise < 0.0) throw validation_error("AAP below user height");
    if (rise >= max_range) {
        throw empty_disk_error("empty coverage disk: AAP flies more than R_max above the users");
    }
    return std::sqrt(max_range * max_range - rise * rise);
}

std::pair<Vec2, Vec2> BuildingSegment::endpoints() const {
    // The segment direction makes angle (pi/2 + orientation) with the
    // outward radial direction at the center.
    const double radial = std::atan2(center.y, center.x);
    const double dir = radial + kPi / 2.0 + orientation;
    const Vec2 half{0.5 * length * std::cos(dir), 0.5 * length * std::sin(dir)};
    const Vec2 a = center + half;
    const Vec2 b = center - half;
    return a.norm2() <= b.norm2() ? std::make_pair(a, b) : std::make_pair(b, a);
}

ChordDistances chord_distances(const BuildingSegment& b, double disk_radius) {
    reject_degenerate(b);
    const double dx = b.center_distance();
    const double base = 0.25 * b.length * b.length + dx * dx;
    const double term = dx * b.length * std::sin(b.orientation);
    const double d_near = std::sqrt(std::max(0.0, base - term));
    const double d_far = std::min(disk_radius, std::sqrt(base + term));
    return {d_near, d_far};
}

BlockageAngles blockage_angles(const BuildingSegment& b, const ScenarioHeights& heights,
                               double disk_radius) {
    const ChordDistances cd = chord_distances(b, disk_radius);
    BlockageAngles out;
    out.d_near = cd.d_near;
    out.d_far = cd.d_far;
    const double dx = b.center_distance();
    const double base = 0.25 * b.length * b.length + dx * dx;
    const double term = dx * b.length * std::sin(b.orientation);
    if (std::sqrt(base + term) <= disk_radius) {
        // Chord fully inside the disk: the subtended angle straight from
        // the endpoint vectors, which stays exact near zero where the
        // arccos form loses all precision.
        const auto [q, p] = b.endpoints();
        out.theta = std::atan2(std::abs(q.cross(p)), q.dot(p));
    } else {
        const double denom = cd.d_near * cd.d_far;
        const double num = dx * dx - 0.25 * b.length * b.length;
        out.theta = denom > 0.0 ? std::acos(clamp_unit(num / denom)) : 0.0;
    }
    if (out.theta > 0.0) {
        out.beta = std::atan((std::cos(out.theta) - cd.d_near / cd.d_far) / std::sin(out.theta));
    }
    if (heights.aap_above_rooftop()) out.stretch = heights.shadow_stretch();
    return out;
}

double coverage_gain_exact(const BuildingSegment& b, const ScenarioHeights& heights,
                           double disk_radius) {
    require_above_rooftop(heights, "coverage gain");
    const BlockageAngles g = blockage_angles(b, heights, disk_radius);
    return gain_exact_impl(b, g, *g.stretch, disk_radius);
}

AreaBounds coverage_gain_bounds(const BuildingSegment& b, const ScenarioHeights& heights,
                                double disk_radius) {
    require_above_rooftop(heights, "coverage gain bounds");
    const BlockageAngles g = blockage_angles(b, heights, disk_radius);
    const double lam2 = disk_radius * disk_radius;
    const double stretch = *g.stretch;
    const double far_scaled = stretch * g.d_far;
    const double near_scaled = stretch * g.d_near;
    AreaBounds out;
    out.lower = 0.5 * g.theta * std::max(0.0, lam2 - far_scaled * far_scaled);
    out.upper = 0.5 * g.theta * std::max(0.0, lam2 - near_scaled * near_scaled);
    return out;
}

double shadow_area_exact(const BuildingSegment& b, const ScenarioHeights& heights,
                         double disk_radius) {
    const BlockageAngles g = blockage_angles(b, heights, disk_radius);
    if (g.d_near >= disk_radius) return 0.0;
    const double base = naive_shadow(g, disk_radius);
    const double gain = g.stretch ? gain_exact_impl(b, g, *g.stretch, disk_radius) : 0.0;
    const double cap = 0.5 * g.theta * disk_radius * disk_radius;
    return std::clamp(base - gain, 0.0, cap);
}

AreaBounds shadow_area_bounds(const BuildingSegment& b, const ScenarioHeights& heights,
                              double disk_radius) {
    const BlockageAngles g = blockage_angles(b, heights, disk_radius);
    if (g.d_near >= disk_radius) return {0.0, 0.0};
    const double base = naive_shadow(g, disk_radius);
    const double cap = 0.5 * g.theta * disk_radius * disk_radius;
    AreaBounds gain{0.0, 0.0};
    if (g.stretch) gain = coverage_gain_bounds(b, heights, disk_radius);
    AreaBounds out;
    out.lower = std::clamp(base - gain.upper, 0.0, cap);
    out.upper = std::clamp(base - gain.lower, 0.0, cap);
    return out;
}

double optimal_altitude(double d_far, const ScenarioHeights& heights) {
    if (d_far < 0.0) throw validation_error("chord distance must be >= 0");
    if (heights.building_height < heights.user_height) {
        throw validation_error("optimal altitude requires rooftops at or above user height");
    }
    const double drop = heights.building_height - heights.user_height;
    return std::cbrt(d_far * d_far * drop) + heights.building_height;
}

double altitude_gain_objective(double aap_altitude, double d_far, const ScenarioHeights& heights,
                               double max_range) {
    if (aap_altitude <= heights.building_height) return 0.0;
    const double rise = aap_altitude - heights.user_height;
    if (rise <= 0.0 || rise >= max_range) return 0.0;
    const double lam2 = max_range * max_range - rise * rise;
    const double stretch = rise / (aap_altitude - heights.building_height);
    const double scaled = stretch * d_far;
    return 0.5 * std::max(0.0, lam2 - scaled * scaled);
}

double optimal_altitude_search(double d_far, const ScenarioHeights& heights, double max_range,
                               double step) {
    if (!(step > 0.0)) throw validation_error("grid step must be positive");
    const double lo = heights.building_height + step;
    const double hi = heights.user_height + max_range;
    double best_h = heights.building_height;
    double best_v = 0.0;
    for (double h = lo; h < hi; h += step) {
        const double v = altitude_gain_objective(h, d_far, heights, max_range);
        if (v > best_v) {
            best_v = v;
            best_h = h;
        }
    }
    return best_h;
}

double disk_shadow_area(const DiskObstacle& b, const ScenarioHeights& heights,
                        double disk_radius) {
    const double rho = 0.5 * b.diameter;
    if (rho < 0.0) throw validation_error("building diameter must be >= 0");
    const double dx = b.center.norm();
    if (dx <= rho) {
        throw degenerate_obstacle_error("AAP ground projection lies inside the building footprint");
    }
    if (rho == 0.0 || dx - rho >= disk_radius) return 0.0;

    const double theta = 2.0 * std::asin(clamp_unit(rho / dx));
    const double tangent = std::sqrt(std::max(0.0, dx * dx - rho * rho));
    // Free area between o and the footprint inside the tangent cone: the
    // tangent kite minus the near circular sector of the footprint.
    const double free_area = tangent * rho - 0.5 * rho * rho * (kPi - theta);
    const double base = std::max(0.0, 0.5 * theta * disk_radius * disk_radius - free_area);
    double gain = 0.0;
    if (heights.aap_above_rooftop()) {
        const double scaled = heights.shadow_stretch() * (dx + rho);
        gain = 0.5 * theta * std::max(0.0, disk_radius * disk_radius - scaled * scaled);
    }
    return std::max(0.0, base - gain);
}

bool los_blocked(const Vec2& user, const BuildingSegment& b, const ScenarioHeights& heights) {
    const auto [a, c] = b.endpoints();
    // Both footprint endpoints strictly on opposite sides of the link...
    const double side_a = user.cross(a);
    const double side_c = user.cross(c);
    if (!(side_a * side_c < 0.0)) return false;
    // ...and o and the user strictly on opposite sides of the footprint.
    const Vec2 e = c - a;
    const double side_o = e.cross(Vec2{} - a);
    const double side_u = e.cross(user - a);
    if (!(side_o * side_u < 0.0)) return false;
    if (!heights.aap_above_rooftop()) return true;
    const double t = side_o / (side_o - side_u);  // crossing parameter along the link
    return t * heights.shadow_stretch() >= 1.0;
}

bool los_blocked(const Vec2& user, const DiskObstacle& b, const ScenarioHeights& heights) {
    const double rho = 0.5 * b.diameter;
    if (rho <= 0.0) return false;
    const double u2 = user.norm2();
    if (u2 <= 0.0) return false;
    const double proj = user.dot(b.center);
    const double disc = proj * proj - u2 * (b.center.norm2() - rho * rho);
    if (disc <= 0.0) return false;  // misses or grazes the footprint
    const double root = std::sqrt(disc);
    const double t_entry = (proj - root) / u2;
    const double t_exit = (proj + root) / u2;
    if (t_entry > 1.0 || t_exit < 0.0) return false;
    if (!heights.aap_above_rooftop()) return true;
    return std::max(t_entry, 0.0) * heights.shadow_stretch() >= 1.0;
}

}  // namespace a2x
