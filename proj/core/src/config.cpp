#include "a2x/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "a2x/errors.hpp"

namespace a2x {
namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw validation_error("config line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& v, int line) {
    errno = 0;
    char* end = nullptr;
    const double out = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0' || errno == ERANGE) fail(line, "bad number '" + v + "'");
    return out;
}

std::int64_t parse_count(const std::string& v, int line) {
    errno = 0;
    char* end = nullptr;
    const long long out = std::strtoll(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0' || errno == ERANGE || out < 0) {
        fail(line, "bad count '" + v + "'");
    }
    return out;
}

std::uint64_t parse_seed(const std::string& v, int line) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long out = std::strtoull(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0' || errno == ERANGE) fail(line, "bad seed '" + v + "'");
    return out;
}

}  // namespace

Scenario parse_config_text(const std::string& text) {
    Scenario sc;
    LinkBudget budget;
    bool has_budget_key = false;
    bool has_r_max = false;
    double len_min = sc.length_dist.min;
    double len_max = sc.length_dist.max;

    std::unordered_map<std::string, int> seen;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto comment = raw.find('#');
        if (comment != std::string::npos) raw.erase(comment);
        const std::string entry = trim(raw);
        if (entry.empty()) continue;
        const auto eq = entry.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value'");
        const std::string key = trim(entry.substr(0, eq));
        const std::string value = trim(entry.substr(eq + 1));
        if (key.empty()) fail(line, "empty key");
        if (value.empty()) fail(line, "empty value for '" + key + "'");
        if (!seen.emplace(key, line).second) fail(line, "duplicate key '" + key + "'");

        if (key == "r_max") {
            sc.explicit_max_range = parse_double(value, line);
            has_r_max = true;
        } else if (key == "g") {
            budget.beam_gain = parse_double(value, line);
            has_budget_key = true;
        } else if (key == "sigma2") {
            budget.normalized_noise = parse_double(value, line);
            has_budget_key = true;
        } else if (key == "gamma") {
            budget.snr_threshold = parse_double(value, line);
            has_budget_key = true;
        } else if (key == "alpha") {
            budget.pathloss_exponent = parse_double(value, line);
            has_budget_key = true;
        } else if (key == "h_a") {
            sc.heights.aap_altitude = parse_double(value, line);
        } else if (key == "h_u") {
            sc.heights.user_height = parse_double(value, line);
        } else if (key == "h_b") {
            sc.heights.building_height = parse_double(value, line);
        } else if (key == "lambda_b") {
            sc.building_density = parse_double(value, line);
        } else if (key == "len_min") {
            len_min = parse_double(value, line);
        } else if (key == "len_max") {
            len_max = parse_double(value, line);
        } else if (key == "window_radius") {
            sc.window_radius = parse_double(value, line);
        } else if (key == "realizations") {
            sc.mc.realizations = parse_count(value, line);
        } else if (key == "users_per_realization") {
            sc.mc.users_per_realization = parse_count(value, line);
        } else if (key == "seed") {
            sc.mc.seed = parse_seed(value, line);
        } else if (key == "rel_tol") {
            sc.quadrature.relative_tolerance = parse_double(value, line);
        } else if (key == "abs_tol") {
            sc.quadrature.absolute_tolerance = parse_double(value, line);
        } else if (key == "max_subdivisions") {
            sc.quadrature.max_subdivisions = static_cast<int>(parse_count(value, line));
        } else {
            fail(line, "unknown key '" + key + "'");
        }
    }

    if (has_budget_key && has_r_max) {
        throw validation_error("config: give either r_max or the link budget keys, not both");
    }
    if (has_budget_key) {
        sc.budget = budget;
        sc.explicit_max_range.reset();
    }
    sc.length_dist = ScalarDist::uniform(len_min, len_max);
    sc.validate();
    return sc;
}

Scenario parse_config(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw validation_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace a2x
