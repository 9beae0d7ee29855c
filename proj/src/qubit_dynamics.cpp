#include "wgqed/qubit_dynamics.hpp"

#include <cmath>

#include "wgqed/errors.hpp"
#include "wgqed/special_functions.hpp"

namespace wgqed {
namespace {

// e^{z} - 1 without cancellation for small |z|.
cplx expm1_complex(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

const double kFourthRootTwoOverPi = std::pow(2.0 / kPi, 0.25);

}  // namespace

void PulseSpec::validate() const {
  if (!(std::isfinite(omega_s) && omega_s > 0.0)) throw ValidationError("pulse omega_s must be > 0");
  if (!(std::isfinite(delta) && delta > 0.0)) throw ValidationError("pulse delta must be > 0");
  if (!(std::isfinite(length) && length > 0.0)) throw ValidationError("pulse length must be > 0");
}

double PulseSpec::incident_amplitude(double v_g) const {
  return std::pow(8.0 / kPi, 0.25) * std::sqrt(delta * length / v_g);
}

NarrowPulseFlags narrow_pulse_flags(const PulseSpec& pulse, const SystemParams& params,
                                    double narrow_ratio) {
  NarrowPulseFlags flags;
  flags.narrow_band = pulse.delta <= narrow_ratio * pulse.omega_s;
  flags.weak_probe = pulse.delta <= narrow_ratio * params.gamma_rad;
  return flags;
}

double gaussian_packet_k(const PulseSpec& pulse, double v_g, double k) {
  const double dk = pulse.delta_k(v_g);
  const double prefactor = std::pow(8.0 * kPi / (pulse.length * pulse.length * dk * dk), 0.25);
  const double u = (k - pulse.k_s(v_g)) / dk;
  return prefactor * std::exp(-u * u);
}

double DriveIntegral::relative_difference() const {
  return std::abs(exact - narrow) / std::abs(exact);
}

DriveIntegral drive_integral(const PulseSpec& pulse, const SystemParams& params, double t) {
  if (t < 0.0) throw DomainError("drive_integral: t must be >= 0");
  const double amplitude = std::sqrt(pulse.delta / pulse.length);
  const cplx carrier = std::exp(-kI * ((pulse.omega_s - params.omega_q) * t));
  const cplx arg{-pulse.omega_s / pulse.delta, 0.5 * t * pulse.delta};
  const double gaussian = std::exp(-0.25 * pulse.delta * pulse.delta * t * t);

  DriveIntegral out;
  out.exact = std::pow(2.0, -0.25) * std::pow(kPi, 0.75) * amplitude * gaussian *
              (1.0 - special::erf_complex(arg)) * carrier;
  out.narrow = std::pow(kTwoPi, 0.75) * amplitude * carrier;
  return out;
}

double drive_strength(const PulseSpec& pulse, const SystemParams& params) {
  return kFourthRootTwoOverPi * std::sqrt(params.gamma_rad * pulse.delta);
}

cplx qubit_c0(const PulseSpec& pulse, const SystemParams& params, Losses losses) {
  return -drive_strength(pulse, params) / (pulse.omega_s - complex_frequency(params, losses));
}

cplx qubit_beta(const PulseSpec& pulse, const SystemParams& params, double t, Losses losses) {
  const cplx detuning = pulse.omega_s - qubit_frequency(params, losses);
  // e^{-Gt/2} - e^{-i d t} written as a difference of expm1 terms for small t.
  const cplx decay = expm1_complex(cplx{-0.5 * params.gamma_rad * t, 0.0});
  const cplx drive = expm1_complex(-kI * detuning * t);
  return qubit_c0(pulse, params, losses) * (decay - drive);
}

cplx qubit_beta_rhs(const PulseSpec& pulse, const SystemParams& params, double t, cplx beta,
                    Losses losses) {
  const cplx detuning = pulse.omega_s - qubit_frequency(params, losses);
  return -kI * drive_strength(pulse, params) * std::exp(-kI * detuning * t) -
         0.5 * params.gamma_rad * beta;
}

double coupling_g0(const SystemParams& params, double length) {
  return std::sqrt(params.v_g * params.gamma_rad / (2.0 * length));
}

cplx spectral_i1(const SystemParams& params, double omega, double t, Losses losses) {
  const cplx w = omega - complex_frequency(params, losses);
  return expm1_complex(kI * w * t) / w;
}

cplx spectral_i2(double omega, double omega_s, double t) {
  const double u = (omega - omega_s) * t;
  if (std::abs(u) < 1e-6) return t * cplx{1.0, 0.5 * u};
  // (e^{iu} - 1)/(iu) = sin(u)/u + i 2 sin^2(u/2)/u
  const double s = std::sin(0.5 * u);
  return t * cplx{std::sin(u) / u, 2.0 * s * s / u};
}

cplx spectral_amplitude(const PulseSpec& pulse, const SystemParams& params, double omega,
                        double t, Losses losses) {
  const double g0 = coupling_g0(params, pulse.length);
  return -g0 * qubit_c0(pulse, params, losses) *
         (spectral_i1(params, omega, t, losses) - kI * spectral_i2(omega, pulse.omega_s, t));
}

double probe_power_estimate(const PulseSpec& pulse, const SystemParams& params) {
  return kHbar * params.omega_q * pulse.delta / kTwoPi;
}

}  // namespace wgqed
