#pragma once

namespace duet {

// Nondimensional units: hbar = k_B = 1, and parameter presets use m1 = 1 and
// omega_10 = 1. Planck's constant only enters through the hbar/2 thresholds.
inline constexpr double hbar = 1.0;
inline constexpr double half_hbar = 0.5 * hbar;
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

}  // namespace duet
