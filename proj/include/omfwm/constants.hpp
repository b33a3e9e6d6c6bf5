// constants.hpp — Physical constants (CODATA 2018) and unit helpers

#pragma once

#include <numbers>

namespace omfwm::constants {

inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double k_B = 1.380649e-23;      // J/K (exact)
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Cyclic frequency (Hz) to angular frequency (rad/s).
constexpr double from_hz(double hz) noexcept { return two_pi * hz; }
constexpr double to_hz(double rad_s) noexcept { return rad_s / two_pi; }

}  // namespace omfwm::constants
