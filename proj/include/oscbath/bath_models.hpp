#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "oscbath/errors.hpp"

namespace oscbath {

// Memory function mu~(omega) = gamma, a constant.
struct OhmicBath {
    double gamma_tilde = 0.1;  // gamma / omega0
};

// mu~(omega) = gamma / (1 - i omega / Omega); reduces to Ohmic as Omega -> inf.
struct DrudeBath {
    double gamma_tilde = 0.1;
    double omega_cut_tilde = 10.0;  // Omega / omega0
};

struct DiscreteMode {
    double mass_tilde;   // m_j / m
    double omega_tilde;  // omega_j / omega0
};

// Finite sum of bath oscillators; the i0+ prescription is realized as a
// fixed broadening eta added to real frequencies.
struct DiscreteBath {
    std::vector<DiscreteMode> modes;
    double eta_tilde = 1e-6;
};

using BathSpec = std::variant<OhmicBath, DrudeBath, DiscreteBath>;

// Every invariant violation as a readable message; empty means valid.
std::vector<std::string> validate(const BathSpec& bath);

// Throws ValidationError listing all violations.
void require_valid(const BathSpec& bath);

// mu~ at complex frequency in the closed upper half plane (Im omega >= 0).
std::complex<double> memory_transform(const BathSpec& bath, std::complex<double> omega);

// d mu~ / d omega, same domain.
std::complex<double> memory_transform_derivative(const BathSpec& bath,
                                                 std::complex<double> omega);

// Frequencies near which the free-energy integrand is sharply peaked
// (discrete mode positions); empty for continuum baths.
std::vector<double> resonance_hints(const BathSpec& bath);

}  // namespace oscbath
