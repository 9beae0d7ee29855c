#pragma once

// Special functions needed by the closed-form field kernels.
//
// Conventions:
//   E1(z)  principal branch, cut along the closed negative real axis.
//   si(a)  = -\int_a^\infty sin(u)/u du = Si(a) - pi/2
//   ci(a)  = -\int_a^\infty cos(u)/u du = Ci(a)          (a > 0)
//
// With these, E1(i a) = -ci(a) + i si(a) for a > 0. The field kernels use
// that identity through the phase-stable scaled form e^{z} E1(z).
//
// All functions are pure and safe to call concurrently.

#include "wgqed/constants.hpp"

namespace wgqed::special {

/// |z| below which E1 is summed from its power series; continued fraction
/// above.
inline constexpr double kE1SeriesRadius = 4.0;

/// Principal-branch exponential integral E1(z).
/// Throws DomainError for z = 0 or z on the negative real axis.
cplx exp_integral_e1(cplx z);

/// e^{z} E1(z). Avoids overflow/underflow of the two factors separately when
/// |Re z| is large, and keeps the phase of e^{z} out of the result.
cplx exp_integral_e1_scaled(cplx z);

/// Standard sine integral Si(a) = \int_0^a sin(u)/u du.
double sine_integral(double a);

/// si(a) = Si(a) - pi/2. Entire in a; si(a) + si(-a) = -pi.
double sine_integral_shifted(double a);

/// ci(a) = Ci(a) for a > 0. Throws DomainError for a <= 0; callers that need
/// the even extension pass |a|.
double cosine_integral_shifted(double a);

/// Largest |Im z| accepted by erf_complex.
inline constexpr double kErfImagWindow = 30.0;

/// Complex error function. Throws DomainError when |Im z| exceeds the window
/// or the result would overflow a double.
cplx erf_complex(cplx z);

}  // namespace wgqed::special
