#pragma once

// Physical constants pinned to fixed values so that outputs are bit-stable
// across platforms. Energies are carried in eV and lengths in nm; every
// electrostatic prefactor is routed through alpha and hbar*c so that no
// standalone epsilon_0 appears anywhere.
namespace vacshift {

inline constexpr double kPi = 3.14159265358979323846;

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kFineStructure = 1.0 / 137.035999084;
inline constexpr double kHbarCEvNm = 197.3269804;  // eV nm

// Riemann zeta(3), frozen to double precision.
inline constexpr double kZeta3 = 1.2020569031595942854;

}  // namespace vacshift
