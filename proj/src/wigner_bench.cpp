#include "oscbath/wigner_bench.hpp"

#include <cmath>
#include <functional>

#include "oscbath/quadrature.hpp"

namespace oscbath {

namespace {

void check_args(double omega_tilde, double theta) {
    if (!(omega_tilde > 0.0))
        throw ValidationError("wigner_bench: omega_tilde must be > 0");
    if (!(theta > 0.0)) throw ValidationError("wigner_bench: theta must be > 0");
}

// Tensor-product Gauss-Legendre over [-Lq, Lq] x [-Lp, Lp]. Rows are
// independent; each row's partial sum is reduced in fixed order so the result
// does not depend on the thread schedule.
double quad2d(const WignerParams& params, int n,
              const std::function<double(double, double, const WignerParams&)>& g) {
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    const double sq = std::sqrt(1.0 / (params.a * params.omega_tilde * params.omega_tilde));
    const double sp = std::sqrt(1.0 / params.a);
    const double lq = 8.0 * sq, lp = 8.0 * sp;

    std::vector<double> row(n, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < n; ++i) {
        const double q = lq * x[i];
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += w[j] * g(q, lp * x[j], params);
        row[i] = w[i] * s;
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += row[i];
    return total * lq * lp;
}

}  // namespace

WignerParams wigner_params(double omega_tilde, double theta) {
    check_args(omega_tilde, theta);
    const double x = omega_tilde / (2.0 * theta);
    WignerParams p;
    p.omega_tilde = omega_tilde;
    p.theta = theta;
    p.a_inv = (omega_tilde / 2.0) / std::tanh(x);
    p.a = 1.0 / p.a_inv;
    p.norm_n = omega_tilde * p.a / (2.0 * M_PI);
    p.n1 = 2.0 * std::tanh(x);
    return p;
}

double wigner_value(double q, double p, const WignerParams& params) {
    if (!std::isfinite(q) || !std::isfinite(p))
        throw ValidationError("wigner_value: q, p must be finite");
    const double h = 0.5 * p * p +
                     0.5 * params.omega_tilde * params.omega_tilde * q * q;
    return params.norm_n * std::exp(-params.a * h);
}

double wigner_normalization_numeric(const WignerParams& params, int n_per_axis) {
    return quad2d(params, n_per_axis,
                  [](double q, double p, const WignerParams& pr) {
                      return wigner_value(q, p, pr);
                  });
}

double wigner_mean_energy_numeric(const WignerParams& params, int n_per_axis) {
    return quad2d(params, n_per_axis, [](double q, double p, const WignerParams& pr) {
        const double h = 0.5 * p * p + 0.5 * pr.omega_tilde * pr.omega_tilde * q * q;
        return wigner_value(q, p, pr) * h;
    });
}

double entropy_wigner_closed(double omega_tilde, double theta) {
    check_args(omega_tilde, theta);
    const double x = omega_tilde / (2.0 * theta);
    return std::log(0.5 / std::tanh(x)) + 1.0;
}

double entropy_wigner_numeric(double omega_tilde, double theta,
                              const QuadratureSpec& quad, int n_per_axis) {
    check_args(omega_tilde, theta);
    quad.check();
    const WignerParams params = wigner_params(omega_tilde, theta);
    return quad2d(params, n_per_axis, [](double q, double p, const WignerParams& pr) {
        const double w = wigner_value(q, p, pr);
        if (w <= 0.0) return 0.0;  // continuity extension where W underflows
        return -w * std::log(2.0 * M_PI * w);
    });
}

double entropy_exact(double omega_tilde, double theta) {
    if (!(omega_tilde > 0.0))
        throw ValidationError("entropy_exact: omega_tilde must be > 0");
    if (!(theta >= 0.0)) throw ValidationError("entropy_exact: theta must be >= 0");
    if (theta == 0.0) return 0.0;
    const double x = omega_tilde / (2.0 * theta);
    // S = -log(2 sinh x) + x coth x rewritten in terms of em = 1 - e^{-2x}.
    const double em = -std::expm1(-2.0 * x);
    const double t = std::exp(-2.0 * x);
    return -std::log(em) + 2.0 * x * t / em;
}

std::vector<EntropyComparison> compare_entropies(double omega_tilde,
                                                 const std::vector<double>& theta_grid) {
    if (theta_grid.empty())
        throw ValidationError("compare_entropies: theta grid must be nonempty");
    std::vector<EntropyComparison> rows;
    rows.reserve(theta_grid.size());
    for (double th : theta_grid) {
        check_args(omega_tilde, th);
        EntropyComparison r;
        r.theta = th;
        r.s_exact = entropy_exact(omega_tilde, th);
        r.s_wigner = entropy_wigner_closed(omega_tilde, th);
        r.discrepancy = r.s_wigner - r.s_exact;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace oscbath
