#pragma once

#include "oscbath/errors.hpp"

namespace oscbath {

// SI values used only at the I/O boundary; everything internal runs in
// hbar = k = m = omega0 = 1 units.
inline constexpr double kHbarSI = 1.054571817e-34;  // J s
inline constexpr double kBoltzSI = 1.380649e-23;    // J / K

enum class Unit { Frequency, Temperature, Energy, Entropy };

// Reference scales of the oscillator; converts physical I/O values to and
// from the internal dimensionless system.
struct Scales {
    double omega0_ref;  // rad/s, > 0
    double mass_ref;    // kg, > 0

    Scales(double omega0, double mass);
};

double to_internal(double value, Unit unit, const Scales& s);
double from_internal(double value, Unit unit, const Scales& s);

// Dimensionless temperature theta = kT / (hbar omega0).
struct ThermoPoint {
    double theta = 0.0;

    ThermoPoint() = default;
    explicit ThermoPoint(double theta_);
};

// Dimensionless cyclotron ratio b = omega_c / omega0.
struct FieldSpec {
    double b = 0.0;

    FieldSpec() = default;
    explicit FieldSpec(double b_);
};

// Controls for the frequency quadrature.
struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    double cutoff_lambda = 50.0;  // omega_cut = cutoff_lambda * max(theta, 1)
    int max_subdivisions = 2000;

    void check() const;
};

// All energies in hbar*omega0 units, entropy in units of k.
struct ThermoResult {
    double free_energy_total = 0.0;
    double free_energy_zero_field = 0.0;
    double delta_free_energy_field = 0.0;
    double entropy = 0.0;
    double est_abs_error = 0.0;
    long integrand_evals = 0;
};

}  // namespace oscbath
