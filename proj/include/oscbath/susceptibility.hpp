#pragma once

#include <complex>

#include "oscbath/bath_models.hpp"
#include "oscbath/core_types.hpp"

namespace oscbath {

// lambda(omega) = -omega^2 + 1 - i omega mu~(omega), the inverse zero-field
// susceptibility in internal units (m = K = omega0 = 1).
std::complex<double> lambda_of(const BathSpec& bath, double omega);

// d lambda / d omega = -2 omega - i (mu~ + omega mu~').
std::complex<double> lambda_derivative(const BathSpec& bath, double omega);

// alpha0 = 1 / lambda.
std::complex<double> alpha0_of(const BathSpec& bath, double omega);

// det alpha = alpha0^3 / (1 - (b omega alpha0)^2); throws NumericError when
// the field denominator vanishes.
std::complex<double> det_alpha(const BathSpec& bath, const FieldSpec& field, double omega);

struct ResponsePoint {
    double omega;
    std::complex<double> lambda_val;
    std::complex<double> alpha0_val;
    std::complex<double> det_alpha_val;
};

ResponsePoint response_at(const BathSpec& bath, const FieldSpec& field, double omega);

// Im d/domega ln det alpha, the weight of the free-energy integral.
// Evaluated from the closed-form derivative of lambda.
double spectral_weight(const BathSpec& bath, const FieldSpec& field, double omega);

// Zero-field part, 3 Im[alpha0'/alpha0] = -3 Im[lambda'/lambda].
double spectral_weight_zero_field(const BathSpec& bath, double omega);

// Field correction weight; identically 0 at b = 0, and
// spectral_weight = spectral_weight_zero_field + spectral_weight_field_delta.
double spectral_weight_field_delta(const BathSpec& bath, const FieldSpec& field,
                                   double omega);

// Central-difference fallback/oracle for baths with no closed-form
// derivative; step h = 1e-6 * max(omega, 1).
double spectral_weight_fd(const BathSpec& bath, const FieldSpec& field, double omega);

// Three-Lorentzian closed form of the Ohmic weight.
double ohmic_bracket(double gamma_tilde, double b, double omega);

}  // namespace oscbath
