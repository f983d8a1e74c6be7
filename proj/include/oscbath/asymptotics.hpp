#pragma once

#include <utility>
#include <vector>

#include "oscbath/errors.hpp"

namespace oscbath {

// Low-temperature validity window for the linear entropy law; the fit
// excludes samples above it.
inline constexpr double kLowTWindowDefault = 0.05;

// F(theta) ~ -(pi/2) gamma~ theta^2 for an Ohmic bath at low temperature.
double low_t_free_energy(double gamma_tilde, double theta);

// S(theta)/k ~ pi gamma~ theta; vanishes at theta = 0.
double low_t_entropy(double gamma_tilde, double theta);

struct SlopeFit {
    double slope = 0.0;           // fitted dS/dtheta
    double intercept = 0.0;       // fitted S at theta = 0; third law wants 0
    double residual_rms = 0.0;
    double expected_slope = 0.0;  // pi gamma~, supplied by the caller
    int samples_used = 0;
};

// Ordinary least-squares line through (theta, S) samples with
// theta <= theta_max; needs at least 3 usable samples.
SlopeFit fit_third_law_slope(const std::vector<std::pair<double, double>>& samples,
                             double theta_max, double expected_slope);

}  // namespace oscbath
