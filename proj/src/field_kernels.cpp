#include "wgqed/field_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wgqed/errors.hpp"
#include "wgqed/special_functions.hpp"

namespace wgqed {
namespace {

using special::cosine_integral_shifted;
using special::exp_integral_e1_scaled;
using special::sine_integral_shifted;

struct Times {
  double tau;    // |x| / v_g
  double sigma;  // |x -+ v_g t| / v_g
};

std::string describe(const SpaceTimePoint& p) {
  std::ostringstream os;
  os.precision(10);
  os << "(x=" << p.x << ", t=" << p.t << ")";
  return os.str();
}

Times region_times(const SpaceTimePoint& p, const SystemParams& params, Direction direction) {
  check_region(p, params, direction);
  const double tau = std::abs(p.x) / params.v_g;
  const double sigma = direction == Direction::forward ? p.t - p.x / params.v_g
                                                       : p.t + p.x / params.v_g;
  return {tau, sigma};
}

// e^{-i W t} e^{i W tau} E1(i W tau) + 2 pi i e^{-i W sigma} - e^{-i W sigma} E1(-i W sigma)
// with W the complex qubit frequency. The exponential prefactors are folded
// into the scaled E1 so no large phases are formed and multiplied back out.
cplx e1_kernel(double tau, double sigma, double t, cplx omega_tilde) {
  const cplx near = std::exp(-kI * omega_tilde * t) * exp_integral_e1_scaled(kI * omega_tilde * tau);
  const cplx pole = kTwoPi * kI * std::exp(-kI * omega_tilde * sigma);
  const cplx retarded = exp_integral_e1_scaled(-kI * omega_tilde * sigma);
  return near + pole - retarded;
}

// i ci(a) + si(a)
cplx near_bracket(double a) { return {sine_integral_shifted(a), cosine_integral_shifted(a)}; }

// -i ci(b) + si(b)
cplx retarded_bracket(double b) { return {sine_integral_shifted(b), -cosine_integral_shifted(b)}; }

cplx ci_kernel(double tau, double sigma, double omega_s) {
  return std::exp(-kI * (omega_s * sigma)) *
         (kTwoPi + near_bracket(omega_s * tau) + retarded_bracket(omega_s * sigma));
}

// -g0 C0 L / (2 pi v_g A). Algebraically Gamma / (4 pi (w_S - Omega~)); built
// from the physical pieces so that the L-independence of u/A is a real check.
cplx scatter_coefficient(const SystemParams& params, const PulseSpec& pulse, Losses losses) {
  const double g0 = coupling_g0(params, pulse.length);
  const cplx c0 = qubit_c0(pulse, params, losses);
  return -g0 * c0 * pulse.length / (kTwoPi * params.v_g * pulse.incident_amplitude(params.v_g));
}

FieldSample build_field(const SpaceTimePoint& p, const SystemParams& params,
                        const PulseSpec& pulse, Losses losses, Direction direction) {
  const Times tm = region_times(p, params, direction);
  const double ws = pulse.omega_s;
  const cplx c = scatter_coefficient(params, pulse, losses);
  const cplx carrier = std::exp(-kI * (ws * tm.sigma));

  FieldSample s;
  s.point = p;
  s.direction = direction;
  const cplx incident = direction == Direction::forward ? 1.0 : 0.0;
  s.stationary = (incident - kTwoPi * kI * c) * carrier;
  s.damping = c * e1_kernel(tm.tau, tm.sigma, p.t, complex_frequency(params, losses));
  s.coherent_near = -kI * c * carrier * near_bracket(ws * tm.tau);
  s.coherent_retarded = -kI * c * carrier * retarded_bracket(ws * tm.sigma);
  s.coherent = s.coherent_near + s.coherent_retarded;
  s.u_over_A = s.stationary + s.damping + s.coherent;
  return s;
}

void require_large_time(const SystemParams& params, double t, double threshold) {
  if (params.gamma_rad * t < threshold) {
    std::ostringstream os;
    os << "large-time field requires Gamma t >= " << threshold << ", got "
       << params.gamma_rad * t;
    throw PreconditionError(os.str());
  }
}

cplx large_time_field(const SpaceTimePoint& p, const SystemParams& params,
                      const PulseSpec& pulse, Losses losses, Direction direction,
                      double threshold) {
  require_large_time(params, p.t, threshold);
  const Times tm = region_times(p, params, direction);
  const cplx c = scatter_coefficient(params, pulse, losses);
  const cplx carrier = std::exp(-kI * (pulse.omega_s * tm.sigma));
  const cplx incident = direction == Direction::forward ? 1.0 : 0.0;
  return (incident - kTwoPi * kI * c) * carrier -
         kI * c * carrier * near_bracket(pulse.omega_s * tm.tau);
}

}  // namespace

const char* to_string(Direction d) { return d == Direction::forward ? "forward" : "backward"; }

bool in_causal_region(const SpaceTimePoint& p, const SystemParams& params, Direction direction) {
  if (direction == Direction::forward) return p.x > 0.0 && p.x - params.v_g * p.t < 0.0;
  return p.x < 0.0 && p.x + params.v_g * p.t > 0.0;
}

void check_region(const SpaceTimePoint& p, const SystemParams& params, Direction direction) {
  if (!std::isfinite(p.x) || !std::isfinite(p.t)) {
    throw DomainError("non-finite space-time point");
  }
  const double guard = kSingularityGuard * params.wavelength();
  const double retarded = direction == Direction::forward ? p.x - params.v_g * p.t
                                                          : p.x + params.v_g * p.t;
  if (std::abs(p.x) < guard || std::abs(retarded) < guard) {
    throw DomainError(std::string(to_string(direction)) + " field: point " + describe(p) +
                          " is within the singularity guard of x = 0 or the light cone",
                      reason::kSingularity);
  }
  if (!in_causal_region(p, params, direction)) {
    throw CausalityError(std::string(to_string(direction)) + " field: point " + describe(p) +
                         " is outside the causal region");
  }
}

cplx kernel_i1(const SpaceTimePoint& p, const SystemParams& params, Losses losses) {
  const Times tm = region_times(p, params, Direction::forward);
  return e1_kernel(tm.tau, tm.sigma, p.t, complex_frequency(params, losses));
}

cplx kernel_i2(const SpaceTimePoint& p, const SystemParams& params, double omega_s) {
  const Times tm = region_times(p, params, Direction::forward);
  return ci_kernel(tm.tau, tm.sigma, omega_s);
}

cplx kernel_j1(const SpaceTimePoint& p, const SystemParams& params, Losses losses) {
  const Times tm = region_times(p, params, Direction::backward);
  return e1_kernel(tm.tau, tm.sigma, p.t, complex_frequency(params, losses));
}

cplx kernel_j2(const SpaceTimePoint& p, const SystemParams& params, double omega_s) {
  const Times tm = region_times(p, params, Direction::backward);
  return ci_kernel(tm.tau, tm.sigma, omega_s);
}

FieldSample forward_field(const SpaceTimePoint& p, const SystemParams& params,
                          const PulseSpec& pulse, Losses losses) {
  return build_field(p, params, pulse, losses, Direction::forward);
}

FieldSample backward_field(const SpaceTimePoint& p, const SystemParams& params,
                           const PulseSpec& pulse, Losses losses) {
  return build_field(p, params, pulse, losses, Direction::backward);
}

FieldSample field(Direction direction, const SpaceTimePoint& p, const SystemParams& params,
                  const PulseSpec& pulse, Losses losses) {
  return build_field(p, params, pulse, losses, direction);
}

cplx forward_field_large_time(double x, const SystemParams& params, const PulseSpec& pulse,
                              double t, Losses losses, double large_time_threshold) {
  return large_time_field({x, t}, params, pulse, losses, Direction::forward,
                          large_time_threshold);
}

cplx backward_field_large_time(double x, const SystemParams& params, const PulseSpec& pulse,
                               double t, Losses losses, double large_time_threshold) {
  return large_time_field({x, t}, params, pulse, losses, Direction::backward,
                          large_time_threshold);
}

cplx near_field_ratio(double x, const SystemParams& params, double omega_s) {
  if (x == 0.0) throw DomainError("near_field_ratio: x = 0", reason::kSingularity);
  return near_bracket(omega_s * std::abs(x) / params.v_g) / kTwoPi;
}

InterferenceReport interference_report(double x, const SystemParams& params,
                                       const PulseSpec& pulse, Losses losses) {
  if (!(x < 0.0)) {
    throw CausalityError("interference_report: backward region requires x < 0");
  }
  InterferenceReport r{};
  r.r_sq = std::norm(reflection(params, pulse.omega_s, losses));
  r.z = near_field_ratio(x, params, pulse.omega_s);
  r.z_sq = r.r_sq * std::norm(r.z);
  r.cross = 2.0 * r.r_sq * r.z.real();
  return r;
}

double offres_intensity(double x, const SystemParams& params, const PulseSpec& pulse,
                        Direction direction) {
  const double detuning = pulse.omega_s - params.omega_q;
  if (std::abs(detuning - 0.5 * params.gamma_rad) > 1e-6 * params.gamma_rad) {
    throw PreconditionError("offres_intensity requires omega_s = Omega + Gamma/2");
  }
  if (x == 0.0) throw DomainError("offres_intensity: x = 0", reason::kSingularity);
  if ((direction == Direction::forward) != (x > 0.0)) {
    throw CausalityError(std::string("offres_intensity: x has the wrong sign for the ") +
                         to_string(direction) + " region");
  }
  const cplx w = near_field_ratio(x, params, pulse.omega_s);
  const double sign = direction == Direction::forward ? -1.0 : 1.0;
  return 0.5 * std::norm(1.0 + sign * w);
}

AsymptoticField asymptotic_field(const SpaceTimePoint& p, const SystemParams& params,
                                 const PulseSpec& pulse, Direction direction, Losses losses,
                                 double max_ratio) {
  const Times tm = region_times(p, params, direction);
  const double ws = pulse.omega_s;
  const cplx wt = complex_frequency(params, losses);
  const double ratios[4] = {1.0 / (ws * tm.tau), 1.0 / (ws * tm.sigma),
                            1.0 / (std::abs(wt) * tm.tau), 1.0 / (std::abs(wt) * tm.sigma)};
  for (double r : ratios) {
    if (!(r <= max_ratio)) {
      std::ostringstream os;
      os << "asymptotic_field: smallness ratio " << r << " exceeds " << max_ratio << " at "
         << describe(p);
      throw PreconditionError(os.str());
    }
  }
  const cplx c = scatter_coefficient(params, pulse, losses);
  const cplx r_over_2pi = -kI * c;
  const cplx carrier = std::exp(-kI * (ws * tm.sigma));
  const cplx incident = direction == Direction::forward ? 1.0 : 0.0;

  const cplx stationary = (incident - kTwoPi * kI * c) * carrier;
  const cplx damping = r_over_2pi * (std::exp(-kI * wt * p.t) / (wt * tm.tau) -
                                     kTwoPi * std::exp(-kI * wt * tm.sigma) +
                                     1.0 / (wt * tm.sigma));
  // carrier * e^{i w_S sigma} = 1 exactly, so the retarded term carries no phase.
  const cplx coherent = -r_over_2pi * (carrier * std::exp(-kI * (ws * tm.tau)) / (ws * tm.tau) +
                                       1.0 / (ws * tm.sigma));
  return {stationary + damping + coherent, std::max(ratios[0], ratios[1])};
}

std::vector<double> timeseries_intensity(double x0, const SystemParams& params,
                                         const PulseSpec& pulse,
                                         const std::vector<double>& times, Losses losses) {
  const Direction direction = x0 > 0.0 ? Direction::forward : Direction::backward;
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    out.push_back(std::norm(build_field({x0, t}, params, pulse, losses, direction).u_over_A));
  }
  return out;
}

}  // namespace wgqed
