#include <doctest.h>

#include "reference.hpp"
#include "wgqed/commands.hpp"
#include "wgqed/errors.hpp"
#include "wgqed/field_kernels.hpp"
#include "wgqed/oracle.hpp"
#include "wgqed/special_functions.hpp"

using namespace wgqed;
using namespace wgqed::oracle;

namespace {

SystemParams desk() { return SystemParams{200.0, 1.0, 0.0, 0.0, 1.0}; }

PulseSpec desk_pulse(const SystemParams& p) {
  PulseSpec pulse;
  pulse.omega_s = p.omega_q + p.gamma_rad;
  pulse.delta = 1e-3 * p.gamma_rad;
  return pulse;
}

std::vector<double> sample_times() {
  std::vector<double> ts;
  for (int i = 0; i <= 20; ++i) ts.push_back(0.5 * i);
  for (Direction d : {Direction::forward, Direction::backward}) {
    for (const auto& pt : mode_sum_probes(d)) ts.push_back(pt.t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

const Trajectory& shared_run() {
  static const Trajectory traj = [] {
    const SystemParams p = desk();
    return mode_sum_simulate(desk_pulse(p), p, ModeSumConfig::desk_scale(p), sample_times());
  }();
  return traj;
}

cplx closed_kernel(Kernel k, const SpaceTimePoint& pt, const SystemParams& p, double ws) {
  switch (k) {
    case Kernel::I1: return kernel_i1(pt, p);
    case Kernel::I2: return kernel_i2(pt, p, ws);
    case Kernel::J1: return kernel_j1(pt, p);
    case Kernel::J2: return kernel_j2(pt, p, ws);
  }
  return {};
}

}  // namespace

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int n : {4, 16, 32}) {
    const GaussRule rule = gauss_legendre(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < 2 * n; ++k) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(std::abs(sum - exact) < 1e-14);
    }
  }
}

TEST_CASE("quadrature configuration limits") {
  const SystemParams p;
  QuadratureConfig cfg;
  CHECK_NOTHROW(cfg.validate(p));
  cfg.omega_max = p.omega_q + 500.0 * p.gamma_rad;
  CHECK_THROWS_AS(cfg.validate(p), ValidationError);
  cfg = {};
  cfg.periods_avg = 9;
  CHECK_THROWS_AS(cfg.validate(p), ValidationError);
  cfg.periods_avg = 6;
  CHECK_THROWS_AS(cfg.validate(p), ValidationError);
  cfg = {};
  cfg.panel_points = 12;
  CHECK_THROWS_AS(cfg.validate(p), ValidationError);
}

TEST_CASE("quadrature oracle is self-consistent") {
  const SystemParams p;
  PulseSpec pulse;
  pulse.omega_s = p.omega_q;
  const SpaceTimePoint pt{3e-3, 1e-9};
  QuadratureConfig cfg;
  const cplx value = quadrature_kernel(Kernel::I2, pt, p, pulse, cfg);
  CHECK(ref::rel(value, kernel_i2(pt, p, pulse.omega_s)) <= 1e-4);

  QuadratureConfig fine = cfg;
  fine.panel_points *= 2;
  fine.periods_avg *= 2;
  CHECK(value == quadrature_kernel_once(Kernel::I2, pt, p, pulse, fine));

  QuadratureConfig wide = cfg;
  wide.omega_max = 2.0 * (p.omega_q + 2000.0 * p.gamma_rad);
  for (Kernel k : {Kernel::I1, Kernel::I2}) {
    const cplx a = quadrature_kernel(k, pt, p, pulse, cfg);
    const cplx b = quadrature_kernel(k, pt, p, pulse, wide);
    CHECK(ref::rel(a, b) <= 1e-4);
  }

  CHECK_THROWS_AS(quadrature_kernel(Kernel::I1, {0.5, 1e-9}, p, pulse, cfg), CausalityError);
  CHECK_THROWS_AS(quadrature_kernel(Kernel::J1, {3e-3, 1e-9}, p, pulse, cfg), CausalityError);
  // The I1 integrand has no pole on the real axis.
  const cplx w = p.omega_q - complex_frequency(p);
  CHECK(std::abs(w) == doctest::Approx(0.5 * p.gamma_rad));
}

TEST_CASE("closed-form kernels agree with quadrature on the frozen grids") {
  const SystemParams p;
  PulseSpec pulse;
  pulse.omega_s = p.omega_q;
  for (Kernel k : {Kernel::I1, Kernel::I2, Kernel::J1, Kernel::J2}) {
    const Direction d = k == Kernel::I1 || k == Kernel::I2 ? Direction::forward : Direction::backward;
    double worst = 0.0;
    for (const auto& pt : oracle_grid(p, d)) {
      const cplx q = quadrature_kernel(k, pt, p, pulse, {});
      worst = std::max(worst, ref::rel(closed_kernel(k, pt, p, pulse.omega_s), q));
    }
    CAPTURE(to_string(k));
    CHECK(worst <= 1e-4);
  }
}

TEST_CASE("lossy kernel agrees with quadrature") {
  SystemParams p;
  p.gamma_phi = 0.3 * p.gamma_rad;
  p.gamma_loss = 0.2 * p.gamma_rad;
  PulseSpec pulse;
  for (const auto& pt : {SpaceTimePoint{2e-3, 0.8e-9}, SpaceTimePoint{25e-3, 3e-9}}) {
    const cplx q = quadrature_kernel(Kernel::I1, pt, p, pulse, {}, Losses::included);
    CHECK(ref::rel(kernel_i1(pt, p, Losses::included), q) <= 1e-4);
  }
}

TEST_CASE("principal-value integral reproduces the ci/si form") {
  for (double ws : {1.0, 3.0, 200.0}) {
    for (double tau : {0.05, 0.7, 2.0}) {
      const cplx expected{-special::cosine_integral_shifted(ws * tau),
                          -special::sine_integral_shifted(-ws * tau)};
      CAPTURE(ws);
      CAPTURE(tau);
      CHECK(std::abs(principal_value_exp_over_z(ws, tau) - expected) <= 1e-6);
    }
  }
  CHECK_THROWS_AS(principal_value_exp_over_z(0.0, 1.0), PreconditionError);
}

TEST_CASE("mode-sum configuration limits") {
  const SystemParams p = desk();
  ModeSumConfig cfg = ModeSumConfig::desk_scale(p);
  CHECK_NOTHROW(cfg.validate(p));
  CHECK(cfg.spacing() <= p.gamma_rad / 20.0);
  cfg.n_modes = 1000;
  CHECK_THROWS_AS(cfg.validate(p), ValidationError);
  cfg = ModeSumConfig::desk_scale(p);
  cfg.window = 20.0;
  cfg.n_modes = 2000;
  CHECK_THROWS_AS(cfg.validate(p), ValidationError);
  cfg = ModeSumConfig::desk_scale(p);
  cfg.dt = 2e-3;
  CHECK_THROWS_AS(cfg.validate(p), ValidationError);

  PulseSpec outside = desk_pulse(p);
  outside.omega_s = p.omega_q + 80.0;
  CHECK_THROWS_AS(mode_sum_simulate(outside, p, ModeSumConfig::desk_scale(p), {1.0}),
                  PreconditionError);
}

TEST_CASE("mode sum reproduces the qubit amplitude") {
  const Trajectory& traj = shared_run();
  const auto residual = wigner_weisskopf_residual(traj);
  REQUIRE(traj.times.front() == 0.0);
  CHECK(residual.front() == 0.0);
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const double t = traj.times[i];
    if (t < 0.5 || t > 10.0 + 1e-9) continue;
    const double rel = residual[i] / std::abs(qubit_beta(traj.pulse, traj.params, t));
    CAPTURE(t);
    CHECK(rel <= 1e-2);
    CHECK(residual[i] <= 1e-2);
  }
  CHECK_THROWS_AS(traj.snapshot(7.25), PreconditionError);
}

TEST_CASE("mode sum conserves the excitation") {
  const Trajectory& traj = shared_run();
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const double allowed = 1e-8 * std::max(1.0, traj.params.gamma_rad * traj.times[i]);
    CHECK(std::abs(traj.norm[i] - traj.norm.front()) <= allowed);
  }
  CHECK(traj.norm.front() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("forward and backward scattered amplitudes coincide") {
  const Trajectory& traj = shared_run();
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    for (std::size_t k = 0; k < traj.omega.size(); ++k) {
      worst = std::max(worst,
                       std::abs(traj.forward[i][k] - traj.initial[k] - traj.backward[i][k]));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("mode-sum field matches the closed forms") {
  const Trajectory& traj = shared_run();
  for (Direction d : {Direction::forward, Direction::backward}) {
    for (const auto& pt : mode_sum_probes(d)) {
      const cplx closed = field(d, pt, traj.params, traj.pulse).u_over_A;
      const cplx summed = reconstruct_field(traj, pt, d);
      CAPTURE(pt.x);
      CAPTURE(pt.t);
      CHECK(ref::rel(summed, closed) <= 2e-2);
    }
  }
}

TEST_CASE("mode-sum scattered field vanishes ahead of the signal") {
  const Trajectory& traj = shared_run();
  for (const auto& pt : {SpaceTimePoint{6.0, 3.0}, SpaceTimePoint{8.0, 4.0}, SpaceTimePoint{9.0, 5.0}}) {
    CHECK_FALSE(in_causal_region(pt, traj.params, Direction::forward));
    CHECK(std::abs(reconstruct_field(traj, pt, Direction::forward, FieldPart::scattered)) <= 5e-2);
    const SpaceTimePoint mirrored{-pt.x, pt.t};
    CHECK(std::abs(reconstruct_field(traj, mirrored, Direction::backward)) <= 5e-2);
  }
}

TEST_CASE("free propagation without coupling") {
  const SystemParams p = desk();
  const PulseSpec pulse = desk_pulse(p);
  ModeSumConfig cfg = ModeSumConfig::desk_scale(p);
  cfg.coupling = false;
  const Trajectory traj = mode_sum_simulate(pulse, p, cfg, {0.0, 2.0, 5.0});
  for (double t : {0.0, 2.0, 5.0}) {
    for (double x : {-3.0, 0.5, 4.0, 11.0}) {
      const double s = x - p.v_g * t;
      const double envelope = std::exp(-pulse.delta * pulse.delta * s * s / (4.0 * p.v_g * p.v_g));
      const cplx packet = envelope * std::exp(kI * (pulse.omega_s * s / p.v_g));
      CHECK(std::abs(reconstruct_field(traj, {x, t}, Direction::forward) - packet) <= 1e-3);
    }
    CHECK(std::abs(traj.beta[traj.snapshot(t)]) == 0.0);
  }
}
