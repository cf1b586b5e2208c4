#pragma once

namespace higgsrg::constants {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double pi_sq = pi * pi;

// One-loop slopes of the inverse-squared gauge couplings:
//   d(1/g1^2)/dt = -c1,  d(1/g2^2)/dt = +c2,  d(1/g3^2)/dt = +c3.
inline constexpr double c1 = 41.0 / (48.0 * pi_sq);
inline constexpr double c2 = 19.0 / (48.0 * pi_sq);
inline constexpr double c3 = 7.0 / (8.0 * pi_sq);

// Planck mass in GeV and the GeV -> cm^-1 conversion.
inline constexpr double planck_mass_gev = 1.2209e19;
inline constexpr double hbar_c_gev_cm = 1.9733e-14;
inline constexpr double inv_cm_per_gev = 1.0 / hbar_c_gev_cm; // ~5.0677e13

} // namespace higgsrg::constants
