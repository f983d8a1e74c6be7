#include "oscbath/core_types.hpp"

#include <cmath>

namespace oscbath {

Scales::Scales(double omega0, double mass) : omega0_ref(omega0), mass_ref(mass) {
    if (!(omega0 > 0.0) || !std::isfinite(omega0))
        throw ValidationError("Scales: omega0_ref must be > 0 and finite");
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw ValidationError("Scales: mass_ref must be > 0 and finite");
}

ThermoPoint::ThermoPoint(double theta_) : theta(theta_) {
    if (!(theta >= 0.0) || !std::isfinite(theta))
        throw ValidationError("ThermoPoint: theta must be >= 0 and finite");
}

FieldSpec::FieldSpec(double b_) : b(b_) {
    if (!(b >= 0.0) || !std::isfinite(b))
        throw ValidationError("FieldSpec: b must be >= 0 and finite");
}

void QuadratureSpec::check() const {
    if (!(rel_tol > 0.0)) throw ValidationError("QuadratureSpec: rel_tol must be > 0");
    if (!(abs_tol > 0.0)) throw ValidationError("QuadratureSpec: abs_tol must be > 0");
    if (!(cutoff_lambda >= 10.0))
        throw ValidationError("QuadratureSpec: cutoff_lambda must be >= 10");
    if (max_subdivisions < 1)
        throw ValidationError("QuadratureSpec: max_subdivisions must be >= 1");
}

double to_internal(double value, Unit unit, const Scales& s) {
    switch (unit) {
        case Unit::Frequency:
            return value / s.omega0_ref;
        case Unit::Temperature:
            return kBoltzSI * value / (kHbarSI * s.omega0_ref);
        case Unit::Energy:
            return value / (kHbarSI * s.omega0_ref);
        case Unit::Entropy:
            return value / kBoltzSI;
    }
    throw ValidationError("to_internal: unknown unit tag");
}

double from_internal(double value, Unit unit, const Scales& s) {
    switch (unit) {
        case Unit::Frequency:
            return value * s.omega0_ref;
        case Unit::Temperature:
            return kHbarSI * s.omega0_ref * value / kBoltzSI;
        case Unit::Energy:
            return kHbarSI * s.omega0_ref * value;
        case Unit::Entropy:
            return kBoltzSI * value;
    }
    throw ValidationError("from_internal: unknown unit tag");
}

}  // namespace oscbath
