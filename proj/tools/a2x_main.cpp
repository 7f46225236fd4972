// Command line front end: scenario configuration, sweep commands, altitude
// optimization, CSV on stdout. Exit codes: 0 success, 1 usage error,
// 2 validation/geometry error, 3 quadrature nonconvergence.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "a2x/analytic.hpp"
#include "a2x/config.hpp"
#include "a2x/errors.hpp"
#include "a2x/geometry.hpp"
#include "a2x/montecarlo.hpp"
#include "a2x/rng.hpp"
#include "a2x/scenario.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

// Substream tag for per-point seeds in sweeps.
constexpr std::uint64_t kTagSweepPoint = 7;

struct CommonOpts {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "Scenario config file (key = value lines)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", opts.seed, "Override the scenario seed");
    cmd->add_option("--threads", opts.threads, "Worker thread cap (0 = hardware)");
}

a2x::Scenario load_scenario(const CommonOpts& opts) {
    a2x::Scenario sc =
        opts.config_path.empty() ? a2x::Scenario{} : a2x::parse_config(opts.config_path);
    if (opts.seed) sc.mc.seed = *opts.seed;
    sc.validate();
    return sc;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct Grid {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;

    std::vector<double> values() const {
        std::vector<double> out;
        const double slack = 1e-9 * step;
        for (double v = start; v <= stop + slack; v += step) out.push_back(v);
        return out;
    }
};

Grid parse_grid(const std::string& text) {
    Grid g;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw a2x::validation_error("--grid expects START:STOP:STEP");
    }
    try {
        g.start = std::stod(text.substr(0, c1));
        g.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        g.step = std::stod(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw a2x::validation_error("--grid expects numeric START:STOP:STEP");
    }
    if (!(g.step > 0.0) || g.stop < g.start) {
        throw a2x::validation_error("--grid needs STEP > 0 and STOP >= START");
    }
    if ((g.stop - g.start) / g.step > 1e6) {
        throw a2x::validation_error("--grid is too fine");
    }
    return g;
}

void shadow_row(const a2x::Scenario& sc, const a2x::BuildingSegment& b, double h_a) {
    a2x::ScenarioHeights heights = sc.heights;
    heights.aap_altitude = h_a;
    const double lam = a2x::effective_radius(sc.max_range(), heights);
    const a2x::BlockageAngles g = a2x::blockage_angles(b, heights, lam);
    const double s_b = a2x::shadow_area_exact(b, heights, lam);
    const a2x::AreaBounds sb = a2x::shadow_area_bounds(b, heights, lam);
    a2x::AreaBounds gain{0.0, 0.0};
    double gain_exact = 0.0;
    if (heights.aap_above_rooftop()) {
        gain_exact = a2x::coverage_gain_exact(b, heights, lam);
        gain = a2x::coverage_gain_bounds(b, heights, lam);
    }
    std::printf("%s,%s,%s,%s,%s,%s,%s,%s,%s,%s\n", fmt(h_a).c_str(), fmt(g.d_near).c_str(),
                fmt(g.d_far).c_str(), fmt(g.theta).c_str(), fmt(s_b).c_str(),
                fmt(sb.lower).c_str(), fmt(sb.upper).c_str(), fmt(gain_exact).c_str(),
                fmt(gain.lower).c_str(), fmt(gain.upper).c_str());
}

int cmd_shadow(const CommonOpts& opts, double dx, double len, double omega,
               const std::optional<std::string>& grid_text) {
    const a2x::Scenario sc = load_scenario(opts);
    if (dx < 0.0) throw a2x::validation_error("--dx must be >= 0");
    if (len < 0.0) throw a2x::validation_error("--len must be >= 0");
    if (!(omega > 0.0 && omega <= kPi + 1e-12)) {
        throw a2x::validation_error("--omega must lie in (0, pi]");
    }
    const a2x::BuildingSegment b{{dx, 0.0}, len, omega};
    std::printf("h_a,d_s,d_l,theta,s_b,s_b_lower,s_b_upper,s_gain,s_gain_lower,s_gain_upper\n");
    if (grid_text) {
        for (const double h_a : parse_grid(*grid_text).values()) shadow_row(sc, b, h_a);
    } else {
        shadow_row(sc, b, sc.heights.aap_altitude);
    }
    return 0;
}

int cmd_simulate(const CommonOpts& opts) {
    const a2x::Scenario sc = load_scenario(opts);
    const a2x::ConnectivityEstimate est = a2x::estimate_connectivity(sc, opts.threads);
    std::printf("p_c_hat,standard_error,n_realizations,seed\n");
    std::printf("%s,%s,%lld,%llu\n", fmt(est.p_hat).c_str(), fmt(est.standard_error).c_str(),
                static_cast<long long>(est.n_realizations),
                static_cast<unsigned long long>(est.seed));
    return 0;
}

int cmd_bound(const CommonOpts& opts) {
    const a2x::Scenario sc = load_scenario(opts);
    const a2x::BoundResult b = a2x::connectivity_lower_bound(sc);
    std::printf("p_c_lower,raw_value,mean_blocked_area\n");
    std::printf("%s,%s,%s\n", fmt(b.p_lower).c_str(), fmt(b.raw).c_str(),
                fmt(b.mean_blocked_area).c_str());
    return 0;
}

int cmd_sweep(const CommonOpts& opts, const std::string& var, const std::string& grid_text) {
    const a2x::Scenario base = load_scenario(opts);
    const std::vector<double> grid = parse_grid(grid_text).values();
    std::printf("%s,p_c_hat,standard_error,p_c_lower,error\n", var.c_str());
    int ok_points = 0;
    int exit_code = 2;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        a2x::Scenario sc = base;
        if (var == "lambda_b") {
            sc.building_density = grid[i];
        } else if (var == "h_a") {
            sc.heights.aap_altitude = grid[i];
        } else {
            sc.heights.building_height = grid[i];
        }
        sc.mc.seed = a2x::substream_seed(base.mc.seed, i, kTagSweepPoint);
        try {
            const a2x::ConnectivityEstimate est = a2x::estimate_connectivity(sc, opts.threads);
            const a2x::BoundResult bound = a2x::connectivity_lower_bound(sc);
            std::printf("%s,%s,%s,%s,\n", fmt(grid[i]).c_str(), fmt(est.p_hat).c_str(),
                        fmt(est.standard_error).c_str(), fmt(bound.p_lower).c_str());
            ++ok_points;
        } catch (const std::exception& e) {
            std::string msg = e.what();
            for (char& ch : msg) {
                if (ch == ',' || ch == '\n') ch = ';';
            }
            std::printf("%s,,,,%s\n", fmt(grid[i]).c_str(), msg.c_str());
            if (dynamic_cast<const a2x::nonconvergence_error*>(&e) != nullptr) exit_code = 3;
        }
    }
    return ok_points > 0 ? 0 : exit_code;
}

int cmd_optimize_altitude(const CommonOpts& opts, double d_l) {
    const a2x::Scenario sc = load_scenario(opts);
    if (d_l < 0.0) throw a2x::validation_error("--dl must be >= 0");
    const double closed = a2x::optimal_altitude(d_l, sc.heights);
    const double grid = a2x::optimal_altitude_search(d_l, sc.heights, sc.max_range(), 0.01);
    const double obj = a2x::altitude_gain_objective(closed, d_l, sc.heights, sc.max_range());
    std::printf("h_a_star,h_a_star_grid,gain_lower_per_rad\n");
    std::printf("%s,%s,%s\n", fmt(closed).c_str(), fmt(grid).c_str(), fmt(obj).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blockage shadows and connectivity for a single aerial access point"};
    app.require_subcommand(1);

    auto* shadow = app.add_subcommand("shadow", "Per-building shadow and gain columns");
    CommonOpts shadow_opts;
    add_common(shadow, shadow_opts);
    double dx = 0.0;
    double len = 0.0;
    double omega = 0.0;
    std::optional<std::string> shadow_grid;
    shadow->add_option("--dx", dx, "Distance from o to the building center (m)")->required();
    shadow->add_option("--len", len, "Building length (m)")->required();
    shadow->add_option("--omega", omega, "Building orientation in (0, pi] (rad)")->required();
    shadow->add_option("--grid", shadow_grid, "AAP altitude grid START:STOP:STEP");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo connectivity estimate");
    CommonOpts sim_opts;
    add_common(simulate, sim_opts);

    auto* bound = app.add_subcommand("bound", "Closed-form connectivity lower bound");
    CommonOpts bound_opts;
    add_common(bound, bound_opts);

    auto* sweep = app.add_subcommand("sweep", "Paired estimate + bound over a parameter grid");
    CommonOpts sweep_opts;
    add_common(sweep, sweep_opts);
    std::string var;
    std::string sweep_grid;
    sweep->add_option("--var", var, "Swept variable")
        ->required()
        ->check(CLI::IsMember({"lambda_b", "h_a", "h_b"}));
    sweep->add_option("--grid", sweep_grid, "Grid START:STOP:STEP")->required();

    auto* opt = app.add_subcommand("optimize-altitude", "Closed-form optimal AAP altitude");
    CommonOpts opt_opts;
    add_common(opt, opt_opts);
    double d_l = 0.0;
    opt->add_option("--dl", d_l, "Far chord distance d_L of the obstacle (m)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (shadow->parsed()) return cmd_shadow(shadow_opts, dx, len, omega, shadow_grid);
        if (simulate->parsed()) return cmd_simulate(sim_opts);
        if (bound->parsed()) return cmd_bound(bound_opts);
        if (sweep->parsed()) return cmd_sweep(sweep_opts, var, sweep_grid);
        if (opt->parsed()) return cmd_optimize_altitude(opt_opts, d_l);
    } catch (const a2x::nonconvergence_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const a2x::validation_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
