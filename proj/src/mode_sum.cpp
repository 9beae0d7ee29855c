#include <algorithm>
#include <cmath>
#include <sstream>

#include "wgqed/errors.hpp"
#include "wgqed/oracle.hpp"

namespace wgqed::oracle {
namespace {

// Phase factors are advanced by rotation and rebuilt from scratch this often.
constexpr long long kPhaseRefresh = 512;

struct Band {
  std::vector<double> omega;
  std::vector<double> detuning;  // omega - Omega
};

Band make_band(const SystemParams& params, const PulseSpec& pulse, const ModeSumConfig& cfg) {
  const double dw = cfg.spacing();
  const double lo = std::max(0.0, params.omega_q - cfg.window);
  const auto carrier_index = static_cast<long long>(std::llround((pulse.omega_s - lo) / dw));
  if (carrier_index < 0 || carrier_index >= cfg.n_modes) {
    throw PreconditionError("mode_sum_simulate: carrier frequency lies outside the mode band");
  }
  Band band;
  band.omega.resize(cfg.n_modes);
  band.detuning.resize(cfg.n_modes);
  for (int j = 0; j < cfg.n_modes; ++j) {
    band.omega[j] = pulse.omega_s + static_cast<double>(j - carrier_index) * dw;
    band.detuning[j] = band.omega[j] - params.omega_q;
  }
  return band;
}

std::vector<cplx> initial_packet(const Band& band, const PulseSpec& pulse) {
  std::vector<cplx> g(band.omega.size());
  double norm = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double u = (band.omega[j] - pulse.omega_s) / pulse.delta;
    g[j] = std::exp(-u * u);
    norm += std::norm(g[j]);
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& v : g) v *= scale;
  return g;
}

struct State {
  cplx beta;
  std::vector<cplx> fwd;
  std::vector<cplx> bwd;

  double norm() const {
    double n = std::norm(beta);
    for (std::size_t k = 0; k < fwd.size(); ++k) n += std::norm(fwd[k]) + std::norm(bwd[k]);
    return n;
  }
};

// Classic RK4 on
//   beta'    = -i g sum_k (gamma_k + delta_k) e^{-i nu_k t}
//   gamma_k' = delta_k' = -i g beta e^{i nu_k t}
// with nu_k = omega_k - Omega. `on_step(n, state)` runs after every step.
template <class Callback>
void integrate(State& s, const std::vector<double>& nu, double g, double h, long long steps,
               Callback&& on_step) {
  const std::size_t n = nu.size();
  std::vector<cplx> p0(n), ph(n), p1(n), half_turn(n);
  for (std::size_t k = 0; k < n; ++k) half_turn[k] = std::exp(kI * (nu[k] * 0.5 * h));
  const cplx mig = -kI * g;

  for (long long step = 0; step < steps; ++step) {
    const double t = static_cast<double>(step) * h;
    if (step % kPhaseRefresh == 0) {
      for (std::size_t k = 0; k < n; ++k) p0[k] = std::exp(kI * (nu[k] * t));
    }
    for (std::size_t k = 0; k < n; ++k) {
      ph[k] = p0[k] * half_turn[k];
      p1[k] = ph[k] * half_turn[k];
    }

    const cplx b1 = s.beta;
    cplx acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += (s.fwd[k] + s.bwd[k]) * std::conj(p0[k]);
    const cplx r1 = mig * acc;

    // Each branch moves by (h/2)(-i g b1 p0_k) in stage 2, so the sum of both
    // branches moves by twice that.
    const cplx b2 = s.beta + 0.5 * h * r1;
    acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      acc += (s.fwd[k] + s.bwd[k] + h * mig * b1 * p0[k]) * std::conj(ph[k]);
    }
    const cplx r2 = mig * acc;

    const cplx b3 = s.beta + 0.5 * h * r2;
    acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      acc += (s.fwd[k] + s.bwd[k] + h * mig * b2 * ph[k]) * std::conj(ph[k]);
    }
    const cplx r3 = mig * acc;

    const cplx b4 = s.beta + h * r3;
    acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      acc += (s.fwd[k] + s.bwd[k] + 2.0 * h * mig * b3 * ph[k]) * std::conj(p1[k]);
    }
    const cplx r4 = mig * acc;

    s.beta += h / 6.0 * (r1 + 2.0 * r2 + 2.0 * r3 + r4);
    for (std::size_t k = 0; k < n; ++k) {
      const cplx inc = h / 6.0 * mig * (b1 * p0[k] + 2.0 * (b2 + b3) * ph[k] + b4 * p1[k]);
      s.fwd[k] += inc;
      s.bwd[k] += inc;
    }
    std::swap(p0, p1);
    on_step(step + 1, s);
  }
}

long long steps_for(double t, double h) { return std::llround(t / h); }

}  // namespace

void ModeSumConfig::validate(const SystemParams& params) const {
  const double gamma = params.gamma_rad;
  if (n_modes < 1) throw ValidationError("ModeSumConfig: n_modes must be positive");
  if (spacing() > gamma / 20.0 * (1.0 + 1e-12)) {
    throw ValidationError("ModeSumConfig: mode spacing must not exceed Gamma/20");
  }
  if (window < 50.0 * gamma * (1.0 - 1e-12)) {
    throw ValidationError("ModeSumConfig: window must be at least 50 Gamma");
  }
  if (!(dt > 0.0) || gamma * dt > 1e-3 * (1.0 + 1e-12)) {
    throw ValidationError("ModeSumConfig: Gamma dt must be positive and at most 1e-3");
  }
}

ModeSumConfig ModeSumConfig::desk_scale(const SystemParams& params) {
  ModeSumConfig cfg;
  cfg.n_modes = 4000;
  cfg.window = 50.0 * params.gamma_rad;
  cfg.dt = 1e-3 / params.gamma_rad;
  return cfg;
}

cplx Trajectory::incident_amplitude() const {
  cplx sum = 0.0;
  for (const auto& v : initial) sum += v;
  return sum;
}

cplx Trajectory::drive_scale() const {
  return drive_strength(pulse, params) / (g0 * incident_amplitude());
}

std::size_t Trajectory::snapshot(double t) const {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (std::abs(times[i] - t) <= 1e-9 * std::max(1.0, std::abs(t)) + 0.25 * cfg.dt) return i;
  }
  std::ostringstream os;
  os << "trajectory has no snapshot at t=" << t;
  throw PreconditionError(os.str());
}

Trajectory mode_sum_simulate(const PulseSpec& pulse, const SystemParams& params,
                             const ModeSumConfig& cfg, const std::vector<double>& sample_times,
                             bool check_step) {
  cfg.validate(params);
  pulse.validate();
  if (sample_times.empty()) throw PreconditionError("mode_sum_simulate: no sample times");

  Trajectory traj;
  traj.cfg = cfg;
  traj.params = params;
  traj.pulse = pulse;
  traj.g0 = cfg.coupling ? std::sqrt(params.gamma_rad * cfg.spacing() / (4.0 * kPi)) : 0.0;

  const Band band = make_band(params, pulse, cfg);
  traj.omega = band.omega;
  traj.initial = initial_packet(band, pulse);

  std::vector<long long> marks;
  for (double t : sample_times) {
    if (t < 0.0) throw PreconditionError("mode_sum_simulate: negative sample time");
    marks.push_back(steps_for(t, cfg.dt));
  }
  const long long last = *std::max_element(marks.begin(), marks.end());

  State s{0.0, traj.initial, std::vector<cplx>(cfg.n_modes, 0.0)};
  auto record = [&](long long step, const State& st) {
    for (std::size_t i = 0; i < marks.size(); ++i) {
      if (marks[i] != step) continue;
      traj.times.push_back(static_cast<double>(step) * cfg.dt);
      traj.beta.push_back(st.beta);
      traj.forward.push_back(st.fwd);
      traj.backward.push_back(st.bwd);
      traj.norm.push_back(st.norm());
      break;
    }
  };
  record(0, s);
  integrate(s, band.detuning, traj.g0, cfg.dt, last, record);

  if (check_step && last > 0) {
    State half{0.0, traj.initial, std::vector<cplx>(cfg.n_modes, 0.0)};
    integrate(half, band.detuning, traj.g0, 0.5 * cfg.dt, 2 * last, [](long long, const State&) {});
    const double scale = std::max(std::abs(s.beta), 1e-300);
    const double change = std::abs(half.beta - s.beta) / scale;
    if (change > 1e-6) {
      std::ostringstream os;
      os << "mode_sum_simulate: halving dt changed beta(t_end) by " << change << " relative";
      throw ConvergenceError(os.str());
    }
  }
  return traj;
}

cplx reconstruct_field(const Trajectory& traj, const SpaceTimePoint& point, Direction direction,
                       FieldPart part) {
  const std::size_t i = traj.snapshot(point.t);
  const double v = traj.params.v_g;
  const double t = traj.times[i];
  cplx sum = 0.0;
  if (direction == Direction::forward) {
    const auto& amp = traj.forward[i];
    for (std::size_t k = 0; k < amp.size(); ++k) {
      const cplx a = part == FieldPart::total ? amp[k] : amp[k] - traj.initial[k];
      sum += a * std::exp(kI * (traj.omega[k] / v * (point.x - v * t)));
    }
  } else {
    const auto& amp = traj.backward[i];
    for (std::size_t k = 0; k < amp.size(); ++k) {
      sum += amp[k] * std::exp(-kI * (traj.omega[k] / v * (point.x + v * t)));
    }
  }
  return sum / traj.incident_amplitude();
}

std::vector<double> wigner_weisskopf_residual(const Trajectory& traj) {
  std::vector<double> out;
  out.reserve(traj.times.size());
  const cplx scale = traj.drive_scale();
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const cplx closed = qubit_beta(traj.pulse, traj.params, traj.times[i]);
    out.push_back(std::abs(traj.beta[i] * scale - closed));
  }
  return out;
}

}  // namespace wgqed::oracle
