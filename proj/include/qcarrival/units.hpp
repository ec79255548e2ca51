#pragma once

#include <cmath>
#include <string>

#include "qcarrival/errors.hpp"

// Internal unit system: angstrom, femtosecond, electronvolt.
// Masses enter as rest energies m*c^2 in MeV; wavenumbers are 1/angstrom.

namespace qcarrival {

inline constexpr double hbar    = 0.6582119569;       // eV fs
inline constexpr double c_light = 2997.92458;         // angstrom / fs
inline constexpr double hbar_c  = hbar * c_light;     // eV angstrom (~1973.27)

inline constexpr double mev = 1.0e6;                  // eV per MeV

// Mass in internal units eV fs^2 / angstrom^2 from a rest energy in MeV.
inline double mass_internal(double mass_mev_c2) {
    if (!(mass_mev_c2 > 0.0))
        throw domain_error("mass must be positive, got " + std::to_string(mass_mev_c2) + " MeV/c^2");
    return mass_mev_c2 * mev / (c_light * c_light);
}

// Wavenumber k0 [1/angstrom] of a particle of rest energy mass_mev_c2 moving
// at u_frac * c: p = m u = (m c^2)(u/c)/c, k0 = p/hbar.
inline double wavenumber_from_velocity(double mass_mev_c2, double u_frac) {
    if (!(mass_mev_c2 > 0.0))
        throw domain_error("mass must be positive, got " + std::to_string(mass_mev_c2) + " MeV/c^2");
    if (!(u_frac > 0.0))
        throw domain_error("velocity fraction must be positive, got " + std::to_string(u_frac));
    return mass_mev_c2 * mev * u_frac / hbar_c;
}

// Nonrelativistic kinetic energy [eV] at wavenumber k [1/angstrom].
inline double kinetic_energy(double mass_mev_c2, double k) {
    if (!(mass_mev_c2 > 0.0))
        throw domain_error("mass must be positive, got " + std::to_string(mass_mev_c2) + " MeV/c^2");
    const double hck = hbar_c * k;
    return hck * hck / (2.0 * mass_mev_c2 * mev);
}

// Group velocity [angstrom/fs] at wavenumber k.
inline double group_velocity(double mass_mev_c2, double k) {
    return hbar * k / mass_internal(mass_mev_c2);
}

} // namespace qcarrival
