#pragma once

#include <numbers>

namespace plasmonpair::constants {

inline constexpr double pi = std::numbers::pi;

/// Speed of light in vacuum, m/s.
inline constexpr double c0 = 299'792'458.0;
/// Reduced Planck constant, J s.
inline constexpr double hbar = 1.054'571'817e-34;
/// Impedance of free space, Ohm. Kept at the rounded textbook value used
/// throughout the yield estimates.
inline constexpr double Z0 = 376.7;

inline constexpr double micrometre = 1e-6;
inline constexpr double nanometre = 1e-9;
inline constexpr double picometre_per_volt = 1e-12;

inline constexpr double angular_frequency(double lambda_vac) { return 2.0 * pi * c0 / lambda_vac; }
inline constexpr double vacuum_wavelength(double omega) { return 2.0 * pi * c0 / omega; }

}  // namespace plasmonpair::constants
