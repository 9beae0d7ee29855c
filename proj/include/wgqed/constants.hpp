#pragma once

#include <complex>
#include <numbers>

namespace wgqed {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;
/// Reduced Planck constant, J*s. Only the probe-power estimate uses it.
inline constexpr double kHbar = 1.054571817e-34;

inline constexpr cplx kI{0.0, 1.0};

}  // namespace wgqed
