#pragma once

// Closed-form space-time structure of the field scattered by the qubit.
//
// Notation used throughout:
//   tau   = |x| / v_g              travel time from the qubit to x
//   sigma = |x -+ v_g t| / v_g     retarded time, > 0 inside the causal region
// Forward (x > 0) uses x - v_g t < 0, backward (x < 0) uses x + v_g t > 0.
// In both cases the spectral phase is e^{-i w sigma}, so the backward kernels
// are the forward ones evaluated at the mirrored point.
//
// All field values are normalised by the incident amplitude A.

#include <vector>

#include "wgqed/constants.hpp"
#include "wgqed/qubit_dynamics.hpp"
#include "wgqed/stationary.hpp"

namespace wgqed {

enum class Direction { forward, backward };

const char* to_string(Direction d);

struct SpaceTimePoint {
  double x = 0.0;  ///< position, qubit at x = 0
  double t = 0.0;  ///< time since the start of the interaction
};

/// Minimum |x| and |x -+ v_g t| accepted, as a fraction of the wavelength.
inline constexpr double kSingularityGuard = 1e-6;

/// Checks the causal region of `direction` and the singularity guard. Throws
/// CausalityError or DomainError (reason "singularity").
void check_region(const SpaceTimePoint& p, const SystemParams& params, Direction direction);

bool in_causal_region(const SpaceTimePoint& p, const SystemParams& params, Direction direction);

/// Closed forms of the frequency integrals of I1(w,t) and I2(w,t) against the
/// outgoing plane-wave phase.
cplx kernel_i1(const SpaceTimePoint& p, const SystemParams& params,
               Losses losses = Losses::excluded);
cplx kernel_i2(const SpaceTimePoint& p, const SystemParams& params, double omega_s);
cplx kernel_j1(const SpaceTimePoint& p, const SystemParams& params,
               Losses losses = Losses::excluded);
cplx kernel_j2(const SpaceTimePoint& p, const SystemParams& params, double omega_s);

/// u/A split into the stationary plane wave, the spontaneous-decay (damping)
/// part and the coherent part. The coherent part is further split into the
/// piece that depends on tau only and the piece that depends on sigma.
struct FieldSample {
  SpaceTimePoint point;
  Direction direction = Direction::forward;
  cplx u_over_A;
  cplx stationary;
  cplx damping;
  cplx coherent;
  cplx coherent_near;      ///< tau-only piece; survives at large time
  cplx coherent_retarded;  ///< sigma piece; decays as 1/sigma
};

FieldSample forward_field(const SpaceTimePoint& p, const SystemParams& params,
                          const PulseSpec& pulse, Losses losses = Losses::excluded);
FieldSample backward_field(const SpaceTimePoint& p, const SystemParams& params,
                           const PulseSpec& pulse, Losses losses = Losses::excluded);
FieldSample field(Direction direction, const SpaceTimePoint& p, const SystemParams& params,
                  const PulseSpec& pulse, Losses losses = Losses::excluded);

/// Gamma t above which the large-time fields are accepted.
inline constexpr double kLargeTimeThreshold = 10.0;

/// Large-time field: stationary plane wave plus the tau-only coherent term.
/// Throws PreconditionError if Gamma t < large_time_threshold.
cplx forward_field_large_time(double x, const SystemParams& params, const PulseSpec& pulse,
                              double t, Losses losses = Losses::excluded,
                              double large_time_threshold = kLargeTimeThreshold);
cplx backward_field_large_time(double x, const SystemParams& params, const PulseSpec& pulse,
                               double t, Losses losses = Losses::excluded,
                               double large_time_threshold = kLargeTimeThreshold);

/// (i ci(a) + si(a)) / (2 pi) with a = w_S |x| / v_g: the near-field term
/// relative to the stationary reflection in the large-time backward field.
cplx near_field_ratio(double x, const SystemParams& params, double omega_s);

struct InterferenceReport {
  double r_sq;   ///< |R|^2
  cplx z;        ///< near-field ratio
  double z_sq;   ///< |R|^2 |z|^2
  double cross;  ///< 2 |R|^2 Re z
  double intensity() const { return r_sq + cross + z_sq; }
};

/// |u/A|^2 = |R|^2 (1 + 2 Re z + |z|^2) for the large-time backward field.
InterferenceReport interference_report(double x, const SystemParams& params,
                                       const PulseSpec& pulse,
                                       Losses losses = Losses::excluded);

/// Closed-form transmittance/reflectance at w_S = Omega + Gamma/2:
/// (1/2) |1 -+ (i ci(a) + si(a)) / (2 pi)|^2 (minus forward, plus backward).
double offres_intensity(double x, const SystemParams& params, const PulseSpec& pulse,
                        Direction direction);

struct AsymptoticField {
  cplx u_over_A;
  double correction_scale;  ///< max(v_g/(w_S|x|), v_g/(w_S|x -+ v_g t|))
};

inline constexpr double kAsymptoticMaxRatio = 0.1;

/// Leading large-argument form of the full field. Throws PreconditionError if
/// any of the four smallness ratios exceeds max_ratio.
AsymptoticField asymptotic_field(const SpaceTimePoint& p, const SystemParams& params,
                                 const PulseSpec& pulse, Direction direction,
                                 Losses losses = Losses::excluded,
                                 double max_ratio = kAsymptoticMaxRatio);

/// |u(x0, t)/A|^2 on the given times.
std::vector<double> timeseries_intensity(double x0, const SystemParams& params,
                                         const PulseSpec& pulse,
                                         const std::vector<double>& times,
                                         Losses losses = Losses::excluded);

}  // namespace wgqed
