#include "oscbath/thermo_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>

#include "oscbath/quadrature.hpp"
#include "oscbath/susceptibility.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oscbath {

double f_single(double omega, double theta) {
    if (!(omega > 0.0) || !(theta > 0.0))
        throw std::domain_error("f_single: omega and theta must be > 0");
    const double x = omega / theta;
    // log(1 - e^-x) via whichever of log1p/expm1 keeps full precision
    if (x > M_LN2) return theta * std::log1p(-std::exp(-x));
    return theta * std::log(-std::expm1(-x));
}

double df_dtheta(double omega, double theta) {
    if (!(omega > 0.0) || !(theta > 0.0))
        throw std::domain_error("df_dtheta: omega and theta must be > 0");
    const double x = omega / theta;
    const double log_term =
        (x > M_LN2) ? std::log1p(-std::exp(-x)) : std::log(-std::expm1(-x));
    const double ex = std::expm1(x);
    return log_term - (std::isinf(ex) ? 0.0 : x / ex);
}

namespace {

// Normal-mode frequencies of a discrete bath: near-real zeros of
// Re[lambda] -+ b omega, where the integrand develops peaks of width ~eta.
// Located by a grid scan plus bisection; continuum baths need no hints
// beyond the analytic resonance centers.
std::vector<double> normal_mode_hints(const BathSpec& bath, const FieldSpec& field,
                                      double omega_cut) {
    if (!std::holds_alternative<DiscreteBath>(bath)) return {};
    std::vector<double> roots;
    const int n = 4000;
    std::vector<double> shifts = {0.0};
    if (field.b > 0.0) {
        shifts.push_back(-field.b);
        shifts.push_back(field.b);
    }
    for (double shift : shifts) {
        auto g = [&](double w) { return lambda_of(bath, w).real() + shift * w; };
        double wp = omega_cut / n;
        double gp = g(wp);
        for (int i = 2; i <= n; ++i) {
            const double w = omega_cut * i / n;
            const double gv = g(w);
            if ((gp < 0.0) != (gv < 0.0)) {
                double lo = wp, hi = w;
                const bool lo_neg = gp < 0.0;
                for (int k = 0; k < 60; ++k) {
                    const double mid = 0.5 * (lo + hi);
                    if ((g(mid) < 0.0) == lo_neg)
                        lo = mid;
                    else
                        hi = mid;
                }
                roots.push_back(0.5 * (lo + hi));
            }
            wp = w;
            gp = gv;
        }
    }
    return roots;
}

}  // namespace

std::vector<double> panel_breakpoints(const BathSpec& bath, const FieldSpec& field,
                                      double theta, double omega_cut) {
    std::vector<double> bp = {0.0, 1.0};
    // Positive roots of omega^2 - 1 -+ b omega = 0, where each Lorentzian of
    // the field-split weight peaks.
    if (field.b > 0.0) {
        const double disc = std::sqrt(field.b * field.b + 4.0);
        bp.push_back(0.5 * (-field.b + disc));
        bp.push_back(0.5 * (field.b + disc));
    }
    for (double w : resonance_hints(bath)) bp.push_back(w);
    for (double w : normal_mode_hints(bath, field, omega_cut)) bp.push_back(w);
    // Bose scale; keeps the endpoint panel matched to the integrand width
    // at low temperature.
    if (theta > 0.0 && 10.0 * theta < 1.0) bp.push_back(10.0 * theta);
    bp.push_back(omega_cut);

    std::erase_if(bp, [&](double w) { return w >= omega_cut; });
    bp.push_back(omega_cut);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             bp.end());
    return bp;
}

namespace {

struct PanelIntegral {
    double value = 0.0;
    double err = 0.0;
    long evals = 0;
    int subdivisions = 0;
};

// Fixed-order panel sum: double-exponential rule on the panel touching 0
// (integrable log singularity of f there), adaptive Gauss-Kronrod inside.
PanelIntegral integrate_panels(const std::function<double(double)>& f,
                               const std::vector<double>& bp,
                               const QuadratureSpec& quad) {
    const std::size_t n = bp.size() - 1;

    // Coarse magnitude pass to split the tolerance across panels.
    double mag = 0.0;
    long coarse_evals = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const QuadOutcome c = gk15_once(f, bp[i], bp[i + 1]);
        mag += std::abs(c.value);
        coarse_evals += c.evals;
    }
    const double tol_panel =
        0.5 * (quad.abs_tol + quad.rel_tol * mag) / static_cast<double>(n);

    PanelIntegral acc;
    acc.evals = coarse_evals;
    int budget = quad.max_subdivisions;
    for (std::size_t i = 0; i < n; ++i) {
        QuadOutcome q;
        if (i == 0)
            q = integrate_tanh_sinh(f, bp[i], bp[i + 1], tol_panel);
        else
            q = integrate_gk_adaptive(f, bp[i], bp[i + 1], tol_panel, budget);
        acc.value += q.value;
        acc.err += q.est_abs_error;
        acc.evals += q.evals;
        acc.subdivisions += q.subdivisions;
    }
    return acc;
}

// Bound on the neglected tail beyond omega_cut: |f| <= theta e^{-w/theta}
// and the weight decays like C/w^2 with C read off at the cutoff.
double tail_bound(const BathSpec& bath, const FieldSpec& field, double theta,
                  double omega_cut) {
    const double w = spectral_weight(bath, field, omega_cut);
    const double x = omega_cut / theta;
    const double envelope = (x > 700.0) ? 0.0 : theta * std::exp(-x);
    return std::abs(w) * envelope * theta / M_PI;
}

}  // namespace

ThermoResult free_energy(const BathSpec& bath, const FieldSpec& field,
                         const ThermoPoint& point, const QuadratureSpec& quad) {
    require_valid(bath);
    quad.check();
    const double theta = point.theta;
    if (!(theta >= 0.0)) throw ValidationError("free_energy: theta must be >= 0");
    if (theta == 0.0) return ThermoResult{};  // zero-point term omitted

    const double omega_cut = quad.cutoff_lambda * std::max(theta, 1.0);
    const auto bp = panel_breakpoints(bath, field, theta, omega_cut);

    auto fe_zero = [&](double w) {
        return f_single(w, theta) * spectral_weight_zero_field(bath, w) / M_PI;
    };
    auto fe_delta = [&](double w) {
        return f_single(w, theta) * spectral_weight_field_delta(bath, field, w) / M_PI;
    };
    auto s_total = [&](double w) {
        return -df_dtheta(w, theta) * spectral_weight(bath, field, w) / M_PI;
    };

    const PanelIntegral f0 = integrate_panels(fe_zero, bp, quad);
    PanelIntegral fd;
    if (field.b > 0.0) fd = integrate_panels(fe_delta, bp, quad);
    const PanelIntegral st = integrate_panels(s_total, bp, quad);

    ThermoResult out;
    out.free_energy_zero_field = f0.value;
    out.delta_free_energy_field = fd.value;
    out.free_energy_total = f0.value + fd.value;
    out.entropy = st.value;
    out.est_abs_error = f0.err + fd.err + tail_bound(bath, field, theta, omega_cut);
    out.integrand_evals = f0.evals + fd.evals + st.evals;
    return out;
}

double entropy(const BathSpec& bath, const FieldSpec& field, const ThermoPoint& point,
               const QuadratureSpec& quad, IntegralDiagnostics* diag) {
    require_valid(bath);
    quad.check();
    const double theta = point.theta;
    if (theta == 0.0) {
        if (diag) *diag = IntegralDiagnostics{};
        return 0.0;  // third-law fast path, analytic
    }

    const double omega_cut = quad.cutoff_lambda * std::max(theta, 1.0);
    const auto bp = panel_breakpoints(bath, field, theta, omega_cut);
    auto s_total = [&](double w) {
        return -df_dtheta(w, theta) * spectral_weight(bath, field, w) / M_PI;
    };
    const PanelIntegral st = integrate_panels(s_total, bp, quad);
    if (diag) {
        diag->evals = st.evals;
        diag->est_abs_error = st.err;
        diag->subdivisions_used = st.subdivisions;
        diag->cutoff_used = omega_cut;
    }
    return st.value;
}

namespace {

void check_thetas(const std::vector<double>& thetas) {
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        if (!(thetas[i] >= 0.0))
            throw ValidationError("sweep: thetas must be >= 0");
        if (i > 0 && !(thetas[i] > thetas[i - 1]))
            throw ValidationError("sweep: thetas must be strictly increasing");
    }
}

}  // namespace

std::vector<std::pair<double, ThermoResult>> sweep_serial(
    const BathSpec& bath, const FieldSpec& field, const std::vector<double>& thetas,
    const QuadratureSpec& quad) {
    require_valid(bath);
    check_thetas(thetas);
    std::vector<std::pair<double, ThermoResult>> out;
    out.reserve(thetas.size());
    for (double th : thetas) {
        try {
            out.emplace_back(th, free_energy(bath, field, ThermoPoint(th), quad));
        } catch (const ConvergenceError& e) {
            throw SweepError(e, th, std::move(out));
        }
    }
    return out;
}

std::vector<std::pair<double, ThermoResult>> sweep(const BathSpec& bath,
                                                   const FieldSpec& field,
                                                   const std::vector<double>& thetas,
                                                   const QuadratureSpec& quad) {
    require_valid(bath);
    check_thetas(thetas);
    const long n = static_cast<long>(thetas.size());
    std::vector<ThermoResult> results(thetas.size());
    std::vector<std::exception_ptr> errors(thetas.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < n; ++i) {
        try {
            results[i] = free_energy(bath, field, ThermoPoint(thetas[i]), quad);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }

    std::vector<std::pair<double, ThermoResult>> out;
    out.reserve(thetas.size());
    for (long i = 0; i < n; ++i) {
        if (errors[i]) {
            try {
                std::rethrow_exception(errors[i]);
            } catch (const ConvergenceError& e) {
                throw SweepError(e, thetas[i], std::move(out));
            }
            // non-convergence exceptions propagate as-is
        }
        out.emplace_back(thetas[i], results[i]);
    }
    return out;
}

}  // namespace oscbath
