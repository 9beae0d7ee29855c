#pragma once

// Gaussian single-photon packet, narrow-pulse drive, qubit amplitude beta(t)
// and the scattered spectral amplitude gamma_1(omega, t).

#include "wgqed/constants.hpp"
#include "wgqed/stationary.hpp"

namespace wgqed {

struct PulseSpec {
  double omega_s = kTwoPi * 5e9;  ///< carrier frequency
  double delta = kTwoPi * 1e6;    ///< spectral width
  double length = 1.0;            ///< quantization length L

  void validate() const;

  double k_s(double v_g) const { return omega_s / v_g; }
  double delta_k(double v_g) const { return delta / v_g; }

  /// Incident amplitude A = (8/pi)^{1/4} sqrt(Delta L / v_g).
  double incident_amplitude(double v_g) const;
};

struct NarrowPulseFlags {
  bool narrow_band = false;  ///< Delta / omega_s <= narrow_ratio
  bool weak_probe = false;   ///< Delta / Gamma <= narrow_ratio
  bool ok() const { return narrow_band && weak_probe; }
};

inline constexpr double kDefaultNarrowRatio = 1e-3;

NarrowPulseFlags narrow_pulse_flags(const PulseSpec& pulse, const SystemParams& params,
                                    double narrow_ratio = kDefaultNarrowRatio);

/// Initial packet gamma_k(0) = (8 pi / (L^2 Delta_k^2))^{1/4} exp(-(k-k_S)^2/Delta_k^2).
double gaussian_packet_k(const PulseSpec& pulse, double v_g, double k);

struct DriveIntegral {
  cplx exact;   ///< error-function form, valid for any Delta
  cplx narrow;  ///< leading order in Delta: (2 pi)^{3/4} sqrt(Delta/L) e^{-i(w_S-Omega)t}
  double relative_difference() const;
};

/// \int_0^\infty gamma_0(w) e^{-i(w-Omega)t} dw. Throws DomainError if the
/// error-function argument leaves its stability window.
DriveIntegral drive_integral(const PulseSpec& pulse, const SystemParams& params, double t);

/// Narrow-pulse drive strength (2/pi)^{1/4} sqrt(Gamma Delta).
double drive_strength(const PulseSpec& pulse, const SystemParams& params);

/// C0 = -(2/pi)^{1/4} sqrt(Gamma Delta) / (w_S - Omega + i Gamma/2)
cplx qubit_c0(const PulseSpec& pulse, const SystemParams& params,
              Losses losses = Losses::excluded);

/// beta(t) = C0 (e^{-Gamma t/2} - e^{-i(w_S-Omega)t}), qubit initially in |g>.
cplx qubit_beta(const PulseSpec& pulse, const SystemParams& params, double t,
                Losses losses = Losses::excluded);

/// Right-hand side of the narrow-pulse amplitude equation
/// d beta/dt = -i D e^{-i(w_S-Omega)t} - (Gamma/2) beta.
cplx qubit_beta_rhs(const PulseSpec& pulse, const SystemParams& params, double t, cplx beta,
                    Losses losses = Losses::excluded);

/// On-resonance coupling g0 = sqrt(v_g Gamma / (2L)).
double coupling_g0(const SystemParams& params, double length);

/// (e^{i(w - Omega~)t} - 1) / (w - Omega~)
cplx spectral_i1(const SystemParams& params, double omega, double t,
                 Losses losses = Losses::excluded);

/// \int_0^t e^{i(w - w_S)t'} dt'; equals t at w = w_S.
cplx spectral_i2(double omega, double omega_s, double t);

/// gamma_1(w, t) = -g0 C0 [I1(w,t) - i I2(w,t)]. Also the backward amplitude
/// delta_k(t).
cplx spectral_amplitude(const PulseSpec& pulse, const SystemParams& params, double omega,
                        double t, Losses losses = Losses::excluded);

/// hbar Omega Delta / (2 pi), in watts when Omega and Delta are in rad/s.
double probe_power_estimate(const PulseSpec& pulse, const SystemParams& params);

}  // namespace wgqed
