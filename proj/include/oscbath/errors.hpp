#pragma once

#include <stdexcept>
#include <string>

namespace oscbath {

// Bad input data (parameter out of range, malformed spec).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation diagnostics attached to every quadrature-backed result.
struct IntegralDiagnostics {
    long evals = 0;
    double est_abs_error = 0.0;
    int subdivisions_used = 0;
    double cutoff_used = 0.0;
};

// Quadrature failed to reach the requested tolerance within its budget.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& msg, IntegralDiagnostics d)
        : std::runtime_error(msg), diagnostics(d) {}
    IntegralDiagnostics diagnostics;
};

// A formula hit a numerically singular point (e.g. vanishing denominator).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace oscbath
