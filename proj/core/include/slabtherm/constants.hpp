#pragma once

// Physical constants, SI units, CODATA 2022. Single source of truth for the
// whole library; nothing else is allowed to hard-code these values.
namespace slabtherm::constants {

inline constexpr double speed_of_light = 299792458.0;           // m/s (exact)
inline constexpr double hbar = 1.054571817e-34;                 // J s
inline constexpr double boltzmann = 1.380649e-23;               // J/K (exact)
inline constexpr double vacuum_permeability = 1.25663706127e-6; // N/A^2
inline constexpr double vacuum_permittivity = 8.8541878188e-12; // F/m

}  // namespace slabtherm::constants
