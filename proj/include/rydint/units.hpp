#pragma once

namespace rydint::units {

// Internal conventions: level energies and defects are stored as equivalent
// frequencies E/h (GHz for levels, MHz for defects, matching the table
// columns delta/2pi). Lengths in um, C3 in GHz um^3, vdW coefficients in
// GHz um^6. Every unit conversion lives here.

// CODATA 2018
inline constexpr double speed_of_light_m_s = 299792458.0;
inline constexpr double rydberg_inf_m1 = 10973731.568160;
inline constexpr double electron_mass_u = 5.48579909065e-4;
inline constexpr double bohr_radius_um = 5.29177210903e-5;
inline constexpr double hartree_ghz = 6.579683920502e6; // E_h/h

// R_inf * c, GHz
inline constexpr double rydberg_inf_ghz = rydberg_inf_m1 * speed_of_light_m_s * 1e-9;

// AME 2020 atomic masses, u
inline constexpr double mass_rb87_u = 86.909180531;
inline constexpr double mass_cs133_u = 132.905451961;

/// Reduced-mass Rydberg constant in GHz for an atom of mass M (u).
inline constexpr double rydberg_reduced_ghz(double mass_u) {
    return rydberg_inf_ghz / (1.0 + electron_mass_u / mass_u);
}

/// C3 = q^2 <r><r> conversion: (a0^2 in atomic units) -> GHz um^3.
inline constexpr double c3_au_to_ghz_um3 =
    hartree_ghz * bohr_radius_um * bohr_radius_um * bohr_radius_um;

inline constexpr double ghz_to_mhz = 1e3;
inline constexpr double mhz_to_ghz = 1e-3;

} // namespace rydint::units
