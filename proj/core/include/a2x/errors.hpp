#pragma once

#include <stdexcept>
#include <string>

namespace a2x {

/// Invalid parameters, configs, or violated geometric preconditions.
/// The command line tool maps this family to exit code 2.
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// The AAP flies so high above the users that no point at user height
/// meets the SNR threshold: H_a - H_u >= R_max.
class empty_disk_error : public validation_error {
  public:
    explicit empty_disk_error(const std::string& what) : validation_error(what) {}
};

/// An obstacle passes through (or contains) the AAP ground projection,
/// where its shadow is not defined.
class degenerate_obstacle_error : public validation_error {
  public:
    explicit degenerate_obstacle_error(const std::string& what) : validation_error(what) {}
};

/// Adaptive quadrature exhausted its subdivision budget before reaching
/// the requested tolerances. CLI exit code 3.
class nonconvergence_error : public std::runtime_error {
  public:
    explicit nonconvergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace a2x
