#pragma once

// Stationary (plane-wave) transmission and reflection amplitudes of a
// two-level emitter in an open 1D waveguide, plus the lossy and
// power-dependent generalisations. All frequencies are angular (rad/s or any
// consistent unit); hbar = 1.

#include "wgqed/constants.hpp"

namespace wgqed {

struct SystemParams {
  double omega_q = kTwoPi * 5e9;      ///< qubit frequency Omega
  double gamma_rad = kTwoPi * 1e7;    ///< radiative decay rate into the guide
  double gamma_phi = 0.0;             ///< pure dephasing
  double gamma_loss = 0.0;            ///< non-radiative intrinsic loss
  double v_g = 3e8;                   ///< group velocity

  /// Throws ValidationError naming the first violated invariant.
  void validate() const;

  /// gamma = Gamma/2 + Gamma_phi + Gamma_l/2
  double total_decoherence() const { return 0.5 * gamma_rad + gamma_phi + 0.5 * gamma_loss; }

  /// Free-space wavelength at the qubit frequency, 2 pi v_g / Omega.
  double wavelength() const { return kTwoPi * v_g / omega_q; }
};

struct DriveSpec {
  double omega_s = kTwoPi * 5e9;  ///< probe frequency
  double rabi = 0.0;              ///< Rabi frequency (drive power)

  void validate() const;
};

/// Whether dephasing and intrinsic loss enter through Omega -> Omega - i(Gphi + Gl/2).
enum class Losses { excluded, included };

/// Omega - i(Gamma_phi + Gamma_l/2).
cplx effective_omega(const SystemParams& params);

/// Qubit frequency used by the dynamics: Omega, or effective_omega when losses
/// are included.
cplx qubit_frequency(const SystemParams& params, Losses losses);

/// Complex pole of the scattering amplitudes, qubit_frequency - i Gamma/2.
cplx complex_frequency(const SystemParams& params, Losses losses = Losses::excluded);

/// T = (w - Omega) / (w - Omega + i Gamma/2)
cplx transmission(const SystemParams& params, double omega_s,
                  Losses losses = Losses::excluded);

/// R = -i (Gamma/2) / (w - Omega + i Gamma/2). T = 1 + R.
cplx reflection(const SystemParams& params, double omega_s,
                Losses losses = Losses::excluded);

/// Reflection including dephasing, intrinsic loss and saturation by a drive
/// of Rabi frequency Omega_R.
cplx reflection_driven(const SystemParams& params, const DriveSpec& drive);

/// 1 + reflection_driven.
cplx transmission_driven(const SystemParams& params, const DriveSpec& drive);

}  // namespace wgqed
