#pragma once

#include <functional>
#include <vector>

#include "oscbath/errors.hpp"

namespace oscbath {

struct QuadOutcome {
    double value = 0.0;
    double est_abs_error = 0.0;
    long evals = 0;
    int subdivisions = 0;
};

// Adaptive Gauss-Kronrod (7/15) by deterministic left-to-right bisection.
// `subdivision_budget` is shared across calls and decremented in place;
// exhausting it throws ConvergenceError.
QuadOutcome integrate_gk_adaptive(const std::function<double(double)>& f, double a,
                                  double b, double abs_tol, int& subdivision_budget);

// Double-exponential (tanh-sinh) rule; handles integrable endpoint
// singularities. Throws ConvergenceError if max_levels is exhausted.
QuadOutcome integrate_tanh_sinh(const std::function<double(double)>& f, double a,
                                double b, double abs_tol, int max_levels = 12);

// Single non-adaptive GK15 pass, used for coarse magnitude estimates.
QuadOutcome gk15_once(const std::function<double(double)>& f, double a, double b);

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace oscbath
