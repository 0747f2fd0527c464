// Copyright (c) 2026 The oph2 Authors
// SPDX-License-Identifier: MIT
#pragma once

// Pinned physical constants and model defaults. The values are frozen at the
// precision given here, not refreshed from CODATA, so serialized outputs and
// regression fixtures stay bit-reproducible.

namespace oph2 {

inline constexpr double k_boltzmann_mev_per_kelvin = 0.0861733;
inline constexpr double mev_to_kj_per_mol = 0.0964853;  // 1 meV times Avogadro's number
inline constexpr double bohr_to_angstrom = 0.529177;

// Rigid-rotor rotational constant of H2 in meV. Half the lowest ortho-para
// level splitting of 15.08 meV.
inline constexpr double default_rotational_constant_mev = 7.54;

// H2 equilibrium internuclear distance in Angstrom.
inline constexpr double default_bond_length_angstrom = 0.74;

// Minimum dissociation barrier used as the slow/fast translational-energy
// threshold of the alignment filter, in eV.
inline constexpr double default_vmin_ev = 0.5;

// Latent heat of vaporization of liquid H2 in kJ/mol (literature value,
// configurable wherever it is used).
inline constexpr double default_latent_heat_kj_per_mol = 0.899;

// Heat released by full ortho to para conversion of one mole, kJ/mol.
// Equals the j=1 level energy, 2B, times the meV -> kJ/mol factor.
inline constexpr double default_conversion_heat_kj_per_mol =
    2.0 * default_rotational_constant_mev * mev_to_kj_per_mol;

inline constexpr double pi = 3.14159265358979323846;

}  // namespace oph2
