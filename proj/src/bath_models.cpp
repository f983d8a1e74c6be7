#include "oscbath/bath_models.hpp"

#include <cmath>
#include <sstream>

namespace oscbath {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

void check_upper_half_plane(cplx omega) {
    if (omega.imag() < 0.0)
        throw std::domain_error("memory_transform: Im(omega) must be >= 0");
}

}  // namespace

std::vector<std::string> validate(const BathSpec& bath) {
    std::vector<std::string> violations;
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, OhmicBath>) {
                if (!(b.gamma_tilde > 0.0))
                    violations.push_back("gamma_tilde must be > 0");
            } else if constexpr (std::is_same_v<T, DrudeBath>) {
                if (!(b.gamma_tilde > 0.0))
                    violations.push_back("gamma_tilde must be > 0");
                if (!(b.omega_cut_tilde > 0.0))
                    violations.push_back("omega_cut_tilde must be > 0");
            } else {
                if (b.modes.empty()) violations.push_back("modes nonempty");
                for (std::size_t j = 0; j < b.modes.size(); ++j) {
                    if (!(b.modes[j].mass_tilde > 0.0)) {
                        std::ostringstream os;
                        os << "mode " << j << ": mass_tilde must be > 0";
                        violations.push_back(os.str());
                    }
                    if (!(b.modes[j].omega_tilde > 0.0)) {
                        std::ostringstream os;
                        os << "mode " << j << ": omega_tilde must be > 0";
                        violations.push_back(os.str());
                    }
                }
                if (!(b.eta_tilde > 0.0))
                    violations.push_back("eta_tilde must be > 0");
            }
        },
        bath);
    return violations;
}

void require_valid(const BathSpec& bath) {
    auto violations = validate(bath);
    if (violations.empty()) return;
    std::string msg = "invalid bath:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw ValidationError(msg);
}

std::complex<double> memory_transform(const BathSpec& bath, cplx omega) {
    check_upper_half_plane(omega);
    return std::visit(
        [&](const auto& b) -> cplx {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, OhmicBath>) {
                return cplx{b.gamma_tilde, 0.0};
            } else if constexpr (std::is_same_v<T, DrudeBath>) {
                return b.gamma_tilde / (1.0 - kI * omega / b.omega_cut_tilde);
            } else {
                cplx w = omega;
                if (w.imag() == 0.0) w += kI * b.eta_tilde;
                cplx sum = 0.0;
                for (const auto& m : b.modes) {
                    const double s = m.mass_tilde * m.omega_tilde * m.omega_tilde;
                    sum += s * (1.0 / (w - m.omega_tilde) + 1.0 / (w + m.omega_tilde));
                }
                return 0.5 * kI * sum;
            }
        },
        bath);
}

std::complex<double> memory_transform_derivative(const BathSpec& bath, cplx omega) {
    check_upper_half_plane(omega);
    return std::visit(
        [&](const auto& b) -> cplx {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, OhmicBath>) {
                return cplx{0.0, 0.0};
            } else if constexpr (std::is_same_v<T, DrudeBath>) {
                const cplx d = 1.0 - kI * omega / b.omega_cut_tilde;
                return b.gamma_tilde * kI / (b.omega_cut_tilde * d * d);
            } else {
                cplx w = omega;
                if (w.imag() == 0.0) w += kI * b.eta_tilde;
                cplx sum = 0.0;
                for (const auto& m : b.modes) {
                    const double s = m.mass_tilde * m.omega_tilde * m.omega_tilde;
                    const cplx dm = w - m.omega_tilde;
                    const cplx dp = w + m.omega_tilde;
                    sum += s * (1.0 / (dm * dm) + 1.0 / (dp * dp));
                }
                return -0.5 * kI * sum;
            }
        },
        bath);
}

std::vector<double> resonance_hints(const BathSpec& bath) {
    std::vector<double> hints;
    if (const auto* d = std::get_if<DiscreteBath>(&bath)) {
        hints.reserve(d->modes.size());
        for (const auto& m : d->modes) hints.push_back(m.omega_tilde);
    }
    return hints;
}

}  // namespace oscbath
