#pragma once

// Brute-force validators kept independent of the E1/ci/si closed forms:
// oscillatory quadrature of the defining frequency integrals, and a
// fixed-step integrator for the discretised single-excitation equations.

#include <vector>

#include "wgqed/constants.hpp"
#include "wgqed/field_kernels.hpp"
#include "wgqed/qubit_dynamics.hpp"
#include "wgqed/stationary.hpp"

namespace wgqed::oracle {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

enum class Kernel { I1, I2, J1, J2 };

const char* to_string(Kernel k);

struct QuadratureConfig {
  double omega_max = 0.0;  ///< end of the panel quadrature; 0 means Omega + 2000 Gamma
  int periods_avg = 16;    ///< whole periods averaged in each oscillatory tail
  int panel_points = 16;   ///< Gauss points per panel

  /// Throws ValidationError when omega_max < Omega + 1e3 Gamma, periods_avg
  /// is odd or below 8, or panel_points < 16.
  void validate(const SystemParams& params) const;
};

/// Declared relative accuracy of quadrature_kernel.
inline constexpr double kQuadratureAccuracy = 1e-4;

/// Defining frequency integral of the chosen kernel at `point`. The result is
/// returned only if a second pass with doubled panel_points and periods_avg
/// agrees within kQuadratureAccuracy; otherwise ConvergenceError.
cplx quadrature_kernel(Kernel which, const SpaceTimePoint& point, const SystemParams& params,
                       const PulseSpec& pulse, const QuadratureConfig& cfg,
                       Losses losses = Losses::excluded);

/// Single pass without self-refinement.
cplx quadrature_kernel_once(Kernel which, const SpaceTimePoint& point,
                            const SystemParams& params, const PulseSpec& pulse,
                            const QuadratureConfig& cfg, Losses losses = Losses::excluded);

/// Numerical value of \int_{-w}^{inf} e^{i z tau} / z dz, principal value at
/// z = 0 taken by symmetric excision.
cplx principal_value_exp_over_z(double omega_s, double tau);

struct ModeSumConfig {
  int n_modes = 4000;    ///< modes per direction
  double window = 50.0;  ///< half-width of the mode band around Omega (rad/s)
  double dt = 1e-3;      ///< integrator step (s)
  bool coupling = true;  ///< false freezes the qubit out (free propagation)

  /// Mode spacing 2 window / n_modes; the quantisation length follows as
  /// L = 2 pi v_g / spacing.
  double spacing() const { return 2.0 * window / n_modes; }
  double length(double v_g) const { return kTwoPi * v_g / spacing(); }

  /// Throws ValidationError when spacing > Gamma/20, window < 50 Gamma or
  /// Gamma dt > 1e-3.
  void validate(const SystemParams& params) const;

  /// Band used for desk-scale runs at the given parameters.
  static ModeSumConfig desk_scale(const SystemParams& params);
};

struct Trajectory {
  ModeSumConfig cfg;
  SystemParams params;
  PulseSpec pulse;
  double g0 = 0.0;
  std::vector<double> omega;     ///< mode frequencies, shared by both directions
  std::vector<cplx> initial;     ///< gamma_k(0)
  std::vector<double> times;     ///< snapshot times
  std::vector<cplx> beta;        ///< beta at each snapshot
  std::vector<std::vector<cplx>> forward;   ///< gamma_k at each snapshot
  std::vector<std::vector<cplx>> backward;  ///< delta_k at each snapshot
  std::vector<double> norm;      ///< |beta|^2 + sum|gamma|^2 + sum|delta|^2

  /// Sum of gamma_k(0): the incident amplitude of the discrete packet.
  cplx incident_amplitude() const;
  /// Closed-form drive divided by the discrete drive g0 sum gamma_k(0).
  cplx drive_scale() const;
  /// Index of the snapshot at time t; throws PreconditionError if absent.
  std::size_t snapshot(double t) const;
};

/// Integrates the 2 n_modes + 1 amplitude equations from t = 0 with classic
/// fixed-step RK4 and stores snapshots at `sample_times` (each a multiple of
/// dt up to rounding). Throws ConvergenceError if a run with dt/2 moves
/// beta(t_end) by more than 1e-6 relative.
Trajectory mode_sum_simulate(const PulseSpec& pulse, const SystemParams& params,
                             const ModeSumConfig& cfg, const std::vector<double>& sample_times,
                             bool check_step = true);

enum class FieldPart { total, scattered };

/// u/A at `point` summed over the modes of the snapshot at point.t and
/// normalised by the discrete incident amplitude.
cplx reconstruct_field(const Trajectory& traj, const SpaceTimePoint& point,
                       Direction direction, FieldPart part = FieldPart::total);

/// |beta_modesum(t) - beta_closed(t)| on the snapshot times, beta_modesum
/// scaled by drive_scale().
std::vector<double> wigner_weisskopf_residual(const Trajectory& traj);

}  // namespace wgqed::oracle
