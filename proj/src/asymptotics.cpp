#include "oscbath/asymptotics.hpp"

#include <cmath>

namespace oscbath {

double low_t_free_energy(double gamma_tilde, double theta) {
    if (!(gamma_tilde > 0.0))
        throw ValidationError("low_t_free_energy: gamma_tilde must be > 0");
    if (!(theta >= 0.0)) throw ValidationError("low_t_free_energy: theta must be >= 0");
    return -0.5 * M_PI * gamma_tilde * theta * theta;
}

double low_t_entropy(double gamma_tilde, double theta) {
    if (!(gamma_tilde > 0.0))
        throw ValidationError("low_t_entropy: gamma_tilde must be > 0");
    if (!(theta >= 0.0)) throw ValidationError("low_t_entropy: theta must be >= 0");
    return M_PI * gamma_tilde * theta;
}

SlopeFit fit_third_law_slope(const std::vector<std::pair<double, double>>& samples,
                             double theta_max, double expected_slope) {
    std::vector<std::pair<double, double>> used;
    for (const auto& s : samples)
        if (s.first <= theta_max) used.push_back(s);
    if (used.size() < 3)
        throw ValidationError("fit_third_law_slope: need >= 3 samples with theta <= theta_max");

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : used) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(used.size());
    const double denom = n * sxx - sx * sx;
    SlopeFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0.0;
    for (const auto& [x, y] : used) {
        const double r = y - (fit.intercept + fit.slope * x);
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / n);
    fit.expected_slope = expected_slope;
    fit.samples_used = static_cast<int>(used.size());
    return fit;
}

}  // namespace oscbath
