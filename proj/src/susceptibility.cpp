#include "oscbath/susceptibility.hpp"

#include <cmath>
#include <sstream>

namespace oscbath {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

void check_positive_omega(double omega) {
    if (!(omega > 0.0))
        throw std::domain_error("susceptibility: omega must be > 0");
}

}  // namespace

cplx lambda_of(const BathSpec& bath, double omega) {
    check_positive_omega(omega);
    return -omega * omega + 1.0 - kI * omega * memory_transform(bath, omega);
}

cplx lambda_derivative(const BathSpec& bath, double omega) {
    check_positive_omega(omega);
    const cplx mu = memory_transform(bath, omega);
    const cplx dmu = memory_transform_derivative(bath, omega);
    return -2.0 * omega - kI * (mu + omega * dmu);
}

cplx alpha0_of(const BathSpec& bath, double omega) {
    return 1.0 / lambda_of(bath, omega);
}

cplx det_alpha(const BathSpec& bath, const FieldSpec& field, double omega) {
    const cplx a0 = alpha0_of(bath, omega);
    const cplx ba = field.b * omega * a0;
    const cplx denom = 1.0 - ba * ba;
    if (std::abs(denom) < 1e-300) {
        std::ostringstream os;
        os << "det_alpha: singular field denominator at omega = " << omega;
        throw NumericError(os.str());
    }
    return a0 * a0 * a0 / denom;
}

ResponsePoint response_at(const BathSpec& bath, const FieldSpec& field, double omega) {
    ResponsePoint rp;
    rp.omega = omega;
    rp.lambda_val = lambda_of(bath, omega);
    rp.alpha0_val = 1.0 / rp.lambda_val;
    rp.det_alpha_val = det_alpha(bath, field, omega);
    return rp;
}

// det alpha = 1 / [lambda (lambda - b omega) (lambda + b omega)], so
//   d/domega ln det alpha
//     = -[ lambda'/lambda + (lambda'-b)/(lambda-b omega)
//          + (lambda'+b)/(lambda+b omega) ].

double spectral_weight(const BathSpec& bath, const FieldSpec& field, double omega) {
    const cplx lam = lambda_of(bath, omega);
    const cplx dlam = lambda_derivative(bath, omega);
    const double b = field.b;
    const cplx t0 = dlam / lam;
    const cplx tm = (dlam - b) / (lam - b * omega);
    const cplx tp = (dlam + b) / (lam + b * omega);
    return -(t0 + tm + tp).imag();
}

double spectral_weight_zero_field(const BathSpec& bath, double omega) {
    const cplx lam = lambda_of(bath, omega);
    const cplx dlam = lambda_derivative(bath, omega);
    return -3.0 * (dlam / lam).imag();
}

double spectral_weight_field_delta(const BathSpec& bath, const FieldSpec& field,
                                   double omega) {
    const cplx lam = lambda_of(bath, omega);
    const cplx dlam = lambda_derivative(bath, omega);
    const double b = field.b;
    const cplx t0 = dlam / lam;
    const cplx tm = (dlam - b) / (lam - b * omega);
    const cplx tp = (dlam + b) / (lam + b * omega);
    return -(tm + tp - 2.0 * t0).imag();
}

double spectral_weight_fd(const BathSpec& bath, const FieldSpec& field, double omega) {
    const double h = 1e-6 * std::max(omega, 1.0);
    const cplx lo = det_alpha(bath, field, omega - h);
    const cplx hi = det_alpha(bath, field, omega + h);
    return ((std::log(hi) - std::log(lo)) / (2.0 * h)).imag();
}

double ohmic_bracket(double gamma_tilde, double b, double omega) {
    const double g = gamma_tilde;
    const double w2 = omega * omega;
    const double num = g * (w2 + 1.0);
    const double gw2 = g * g * w2;
    const double d0 = (w2 - 1.0) * (w2 - 1.0) + gw2;
    const double dp = (w2 - 1.0 + b * omega) * (w2 - 1.0 + b * omega) + gw2;
    const double dm = (w2 - 1.0 - b * omega) * (w2 - 1.0 - b * omega) + gw2;
    return num / d0 + num / dp + num / dm;
}

}  // namespace oscbath
