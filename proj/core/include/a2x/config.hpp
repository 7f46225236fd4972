#pragma once

#include <string>

#include "a2x/scenario.hpp"

namespace a2x {

/// Parses a flat `key = value` config (UTF-8, '#' comments) into a
/// Scenario. Unknown keys are errors; missing keys keep the defaults
/// documented in the README. Throws validation_error with the offending
/// line number on parse or validation failures.
///
/// Keys: r_max | g, sigma2, gamma, alpha (give one range source only),
/// h_a, h_u, h_b, lambda_b, len_min, len_max, window_radius,
/// realizations, users_per_realization, seed, rel_tol, abs_tol,
/// max_subdivisions.
Scenario parse_config_text(const std::string& text);

/// Reads the file and forwards to parse_config_text.
Scenario parse_config(const std::string& path);

}  // namespace a2x
