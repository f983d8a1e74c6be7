#pragma once

#include <utility>
#include <vector>

#include "oscbath/bath_models.hpp"
#include "oscbath/core_types.hpp"
#include "oscbath/errors.hpp"

namespace oscbath {

// Free energy of a single oscillator mode, theta * log(1 - exp(-omega/theta)),
// zero-point term omitted; always <= 0.
double f_single(double omega, double theta);

// d f_single / d theta = log(1 - e^-x) - x/(e^x - 1), x = omega/theta.
double df_dtheta(double omega, double theta);

// Free energy, field split, and entropy by frequency quadrature.
// theta = 0 returns exact zeros (third-law fast path).
ThermoResult free_energy(const BathSpec& bath, const FieldSpec& field,
                         const ThermoPoint& point, const QuadratureSpec& quad);

// Entropy S/k alone (analytic differentiation under the integral).
double entropy(const BathSpec& bath, const FieldSpec& field, const ThermoPoint& point,
               const QuadratureSpec& quad, IntegralDiagnostics* diag = nullptr);

// Carries the partial results when a sweep point fails to converge.
struct SweepError : ConvergenceError {
    SweepError(const ConvergenceError& cause, double theta,
               std::vector<std::pair<double, ThermoResult>> partial_)
        : ConvergenceError(cause), failed_theta(theta), partial(std::move(partial_)) {}
    double failed_theta;
    std::vector<std::pair<double, ThermoResult>> partial;
};

// One result per theta; thetas must be strictly increasing and >= 0.
// Parallel over points (OpenMP when available); output order and values are
// identical to sweep_serial.
std::vector<std::pair<double, ThermoResult>> sweep(const BathSpec& bath,
                                                   const FieldSpec& field,
                                                   const std::vector<double>& thetas,
                                                   const QuadratureSpec& quad);

// Serial reference implementation kept for testing and benchmarking.
std::vector<std::pair<double, ThermoResult>> sweep_serial(
    const BathSpec& bath, const FieldSpec& field, const std::vector<double>& thetas,
    const QuadratureSpec& quad);

// Panel breakpoints used by the quadrature (exposed for tests).
std::vector<double> panel_breakpoints(const BathSpec& bath, const FieldSpec& field,
                                      double theta, double omega_cut);

}  // namespace oscbath
