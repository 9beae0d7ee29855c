#include "wgqed/special_functions.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "wgqed/errors.hpp"

namespace wgqed::special {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxSeriesTerms = 6000;
constexpr int kMaxFractionTerms = 200000;

std::string describe(cplx z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

void check_e1_domain(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0) {
    throw DomainError("exp_integral_e1: argument " + describe(z) +
                      " is zero or on the negative real axis");
  }
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("exp_integral_e1: non-finite argument");
  }
}

// E1(z) = -gamma - log z - sum_{n>=1} (-z)^n / (n n!)
cplx e1_series(cplx z) {
  cplx term = 1.0;
  cplx sum = 0.0;
  for (int n = 1; n < kMaxSeriesTerms; ++n) {
    term *= -z / static_cast<double>(n);
    const cplx contribution = term / static_cast<double>(n);
    sum += contribution;
    if (std::abs(contribution) <= kEps * 0.25 * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(z) - sum;
}

// e^{z} E1(z) = 1/(z+1- 1/(z+3- 4/(z+5- ...))), modified Lentz.
cplx e1_scaled_fraction(cplx z) {
  cplx b = z + 1.0;
  cplx c = 1.0 / kTiny;
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 1; i < kMaxFractionTerms; ++i) {
    const double an = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del - 1.0) <= kEps) return h;
  }
  throw ConvergenceError("exp_integral_e1: continued fraction did not converge at " +
                         describe(z));
}

// Near the negative real axis the fraction converges slowly; the series has
// no cancellation problem there because all terms share a sign.
bool use_series(cplx z) {
  const double r = std::abs(z);
  if (r < kE1SeriesRadius) return true;
  return z.real() < 0.0 && std::abs(z.imag()) < kE1SeriesRadius && r < 40.0;
}

}  // namespace

cplx exp_integral_e1(cplx z) {
  check_e1_domain(z);
  if (use_series(z)) return e1_series(z);
  const cplx scaled = e1_scaled_fraction(z);
  return std::exp(-z) * scaled;
}

cplx exp_integral_e1_scaled(cplx z) {
  check_e1_domain(z);
  if (use_series(z)) return std::exp(z) * e1_series(z);
  return e1_scaled_fraction(z);
}

double sine_integral(double a) {
  const double x = std::abs(a);
  double si_abs = 0.0;
  if (x == 0.0) return 0.0;
  if (x <= kE1SeriesRadius) {
    // Si(x) = sum (-1)^n x^{2n+1} / ((2n+1)(2n+1)!)
    double term = x;
    double sum = x;
    const double x2 = x * x;
    for (int n = 1; n < 200; ++n) {
      term *= -x2 / (static_cast<double>(2 * n) * static_cast<double>(2 * n + 1));
      const double contribution = term / static_cast<double>(2 * n + 1);
      sum += contribution;
      if (std::abs(contribution) <= kEps * 0.25 * std::abs(sum)) break;
    }
    si_abs = sum;
  } else {
    const cplx e1 = std::exp(cplx{0.0, -x}) * e1_scaled_fraction(cplx{0.0, x});
    si_abs = e1.imag() + kPi / 2.0;
  }
  return a < 0.0 ? -si_abs : si_abs;
}

double sine_integral_shifted(double a) {
  if (!std::isfinite(a)) {
    if (std::isnan(a)) throw DomainError("sine_integral_shifted: NaN argument");
    return a > 0.0 ? 0.0 : -kPi;
  }
  const double x = std::abs(a);
  double si_pos = 0.0;
  if (x <= kE1SeriesRadius) {
    si_pos = sine_integral(x) - kPi / 2.0;
  } else {
    // E1(ix) = -ci(x) + i si(x); taking si directly avoids the pi/2 round trip.
    const cplx e1 = std::exp(cplx{0.0, -x}) * e1_scaled_fraction(cplx{0.0, x});
    si_pos = e1.imag();
  }
  return a < 0.0 ? -si_pos - kPi : si_pos;
}

double cosine_integral_shifted(double a) {
  if (!(a > 0.0)) {
    throw DomainError("cosine_integral_shifted: argument must be positive, got " +
                      std::to_string(a));
  }
  if (std::isinf(a)) return 0.0;
  if (a <= kE1SeriesRadius) {
    // Ci(a) = gamma + ln a + sum_{n>=1} (-1)^n a^{2n} / (2n (2n)!)
    const double a2 = a * a;
    double term = 1.0;
    double sum = 0.0;
    for (int n = 1; n < 200; ++n) {
      term *= -a2 / (static_cast<double>(2 * n - 1) * static_cast<double>(2 * n));
      const double contribution = term / static_cast<double>(2 * n);
      sum += contribution;
      if (std::abs(contribution) <= kEps * 0.25 * std::abs(sum)) break;
    }
    return kEulerGamma + std::log(a) + sum;
  }
  const cplx e1 = std::exp(cplx{0.0, -a}) * e1_scaled_fraction(cplx{0.0, a});
  return -e1.real();
}

namespace {

constexpr double kTwoOverSqrtPi = 2.0 / 1.7724538509055160273;
constexpr double kInvSqrtPi = 1.0 / 1.7724538509055160273;

// erf(z) = 2/sqrt(pi) sum (-1)^n z^{2n+1} / (n! (2n+1))
cplx erf_maclaurin(cplx z) {
  const cplx z2 = z * z;
  cplx term = z;
  cplx sum = z;
  for (int n = 1; n < kMaxSeriesTerms; ++n) {
    term *= -z2 / static_cast<double>(n);
    const cplx contribution = term / static_cast<double>(2 * n + 1);
    sum += contribution;
    if (std::abs(contribution) <= kEps * 0.125 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

// Faddeeva w(zeta) for Im zeta > 0 via the Laplace continued fraction
// w = (i/sqrt(pi)) / (zeta - (1/2)/(zeta - 1/(zeta - (3/2)/(zeta - ...)))).
cplx faddeeva_fraction(cplx zeta) {
  cplx f = zeta;
  if (std::abs(f) < kTiny) f = kTiny;
  cplx c = f;
  cplx d = 0.0;
  for (int k = 1; k < kMaxFractionTerms; ++k) {
    const double ak = -0.5 * static_cast<double>(k);
    d = zeta + ak * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = zeta + ak / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const cplx del = c * d;
    f *= del;
    if (std::abs(del - 1.0) <= kEps) return kI * kInvSqrtPi / f;
  }
  throw ConvergenceError("erf_complex: Faddeeva continued fraction did not converge");
}

}  // namespace

cplx erf_complex(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("erf_complex: non-finite argument");
  }
  if (std::abs(z.imag()) > kErfImagWindow) {
    throw DomainError("erf_complex: |Im z| exceeds the stability window at " +
                      describe(z));
  }
  // |e^{-z^2}| = e^{y^2 - x^2}; keep well inside the double range.
  if (z.imag() * z.imag() - z.real() * z.real() > 700.0) {
    throw DomainError("erf_complex: result overflows at " + describe(z));
  }
  if (z.real() < 0.0) return -erf_complex(-z);

  if (std::abs(z) < 3.0 || z.real() < 1.0) return erf_maclaurin(z);

  // erfc(z) = e^{-z^2} w(iz); iz lies in the upper half plane with Im >= 1.
  const cplx erfc = std::exp(-z * z) * faddeeva_fraction(kI * z);
  return 1.0 - erfc;
}

}  // namespace wgqed::special
