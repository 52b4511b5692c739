#pragma once

namespace eqspec::constants {

// CODATA 2018
inline constexpr double hbar_J_s = 1.054571817e-34;
inline constexpr double electron_mass_kg = 9.1093837015e-31;
inline constexpr double electron_volt_J = 1.602176634e-19;

// hbar^2 / m_e in eV nm^2 (kinetic prefactor for physical-unit solves)
inline constexpr double hbar_sq_over_me_eV_nm2 =
    hbar_J_s * hbar_J_s / (electron_mass_kg * electron_volt_J) * 1e18;

// Bi(111) bilayer thickness, nm
inline constexpr double default_bilayer_nm = 0.4;

}  // namespace eqspec::constants
