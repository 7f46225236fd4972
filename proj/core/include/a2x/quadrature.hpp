#pragma once

#include <functional>

#include "a2x/errors.hpp"

namespace a2x {

/// Controls for the adaptive Gauss-Kronrod integrators. `max_subdivisions`
/// caps the number of interval bisections per 1D integration.
struct QuadratureSpec {
    double relative_tolerance = 1e-6;
    double absolute_tolerance = 1e-9;
    int max_subdivisions = 2000;

    void validate() const;
};

/// Adaptive 15-point Gauss-Kronrod integration of f over [a, b], refining
/// the worst panel first until the summed error estimate drops below
/// max(abs_tol, rel_tol * |result|). Throws nonconvergence_error once the
/// subdivision budget is spent.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol, int max_subdivisions);

}  // namespace a2x
