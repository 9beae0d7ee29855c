#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "wgqed/commands.hpp"
#include "wgqed/errors.hpp"
#include "wgqed/oracle.hpp"
#include "wgqed/special_functions.hpp"

namespace wgqed {
namespace {

CheckResult make_check(std::string name, double measured, double tolerance,
                       std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.measured = measured;
  c.tolerance = tolerance;
  c.passed = std::isfinite(measured) && measured <= tolerance;
  c.detail = std::move(detail);
  return c;
}

// Runs a check body; numerical exceptions become a failed check.
template <class F>
CheckResult run_check(const std::string& name, double tolerance, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    CheckResult c = make_check(name, std::numeric_limits<double>::infinity(), tolerance, e.what());
    c.passed = false;
    return c;
  }
}

double relative(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

CheckResult check_resonance(const SystemParams& params) {
  const double t2 = std::norm(transmission(params, params.omega_q));
  const double r2 = std::norm(reflection(params, params.omega_q));
  return make_check("resonant_extinction", std::max(t2, std::abs(r2 - 1.0)), 1e-12);
}

CheckResult check_unitarity(const SystemParams& params) {
  double worst = 0.0;
  const auto ws = linspace(params.omega_q - 50.0 * params.gamma_rad,
                           params.omega_q + 50.0 * params.gamma_rad, 10000);
  for (double w : ws) {
    const double sum = std::norm(transmission(params, w)) + std::norm(reflection(params, w));
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return make_check("unitarity", worst, 1e-12);
}

CheckResult check_oracle(oracle::Kernel which, const Scenario& s, const KernelSet& kernels) {
  const std::string name = std::string("oracle_agreement_") + oracle::to_string(which);
  return run_check(name, oracle::kQuadratureAccuracy, [&] {
    const bool forward = which == oracle::Kernel::I1 || which == oracle::Kernel::I2;
    const auto grid = oracle_grid(s.params, forward ? Direction::forward : Direction::backward);
    PulseSpec pulse = s.pulse;
    double worst = 0.0;
    std::size_t used = 0;
    for (const auto& p : grid) {
      if (!in_causal_region(p, s.params, forward ? Direction::forward : Direction::backward)) {
        continue;
      }
      cplx closed;
      switch (which) {
        case oracle::Kernel::I1: closed = kernels.i1(p, s.params, Losses::excluded); break;
        case oracle::Kernel::I2: closed = kernels.i2(p, s.params, pulse.omega_s); break;
        case oracle::Kernel::J1: closed = kernels.j1(p, s.params, Losses::excluded); break;
        case oracle::Kernel::J2: closed = kernels.j2(p, s.params, pulse.omega_s); break;
      }
      const cplx numeric =
          oracle::quadrature_kernel(which, p, s.params, pulse, oracle::QuadratureConfig{});
      worst = std::max(worst, relative(closed, numeric));
      ++used;
    }
    return make_check(name, worst, oracle::kQuadratureAccuracy,
                      std::to_string(used) + " grid points");
  });
}

CheckResult check_principal_value(const Scenario& s) {
  return run_check("principal_value_identity", 1e-6, [&] {
    double worst = 0.0;
    for (double x : {1e-3, 5e-3, 30e-3, 0.3}) {
      const double tau = x / s.params.v_g;
      const double a = s.pulse.omega_s * tau;
      const cplx expected{-special::cosine_integral_shifted(a), -special::sine_integral_shifted(-a)};
      worst = std::max(worst,
                       std::abs(oracle::principal_value_exp_over_z(s.pulse.omega_s, tau) - expected));
    }
    return make_check("principal_value_identity", worst, 1e-6);
  });
}

CheckResult check_causality(const Scenario& s) {
  const double x = 10e-3;
  const double t = 1e-9;  // v_g t = 30 cm
  const SpaceTimePoint outside[] = {{-x, t}, {0.5, t}};
  int rejected = 0;
  int total = 0;
  for (Direction d : {Direction::forward, Direction::backward}) {
    for (SpaceTimePoint p : outside) {
      if (d == Direction::backward) p.x = -p.x;
      ++total;
      try {
        (void)field(d, p, s.params, s.pulse);
      } catch (const CausalityError&) {
        ++rejected;
      }
    }
  }
  return make_check("causality", static_cast<double>(total - rejected), 0.0,
                    std::to_string(rejected) + "/" + std::to_string(total) + " rejected");
}

CheckResult check_decomposition(const Scenario& s) {
  return run_check("decomposition", 1e-12, [&] {
    double worst = 0.0;
    for (Direction d : {Direction::forward, Direction::backward}) {
      for (const auto& p : oracle_grid(s.params, d)) {
        if (!in_causal_region(p, s.params, d)) continue;
        const FieldSample f = field(d, p, s.params, s.pulse);
        const cplx sum = f.stationary + f.damping + f.coherent;
        worst = std::max(worst, std::abs(sum - f.u_over_A) / std::max(1.0, std::abs(f.u_over_A)));
      }
    }
    return make_check("decomposition", worst, 1e-12);
  });
}

CheckResult check_length_independence(const Scenario& s) {
  return run_check("length_independence", 1e-12, [&] {
    double worst = 0.0;
    for (Direction d : {Direction::forward, Direction::backward}) {
      for (const auto& p : oracle_grid(s.params, d)) {
        if (!in_causal_region(p, s.params, d)) continue;
        PulseSpec ref = s.pulse;
        ref.length = 1.0;
        const cplx base = field(d, p, s.params, ref).u_over_A;
        for (double length : {0.5, 2.0}) {
          PulseSpec other = s.pulse;
          other.length = length;
          worst = std::max(worst, relative(field(d, p, s.params, other).u_over_A, base));
        }
      }
    }
    return make_check("length_independence", worst, 1e-12);
  });
}

CheckResult check_stationary_recovery(const Scenario& s) {
  return run_check("stationary_recovery", 1e-2, [&] {
    const double x = 50.0 * s.params.wavelength();
    const double t = 50.0 / s.params.gamma_rad;
    double worst = 0.0;
    for (double w : linspace(s.params.omega_q - 5.0 * s.params.gamma_rad,
                             s.params.omega_q + 5.0 * s.params.gamma_rad, 50)) {
      PulseSpec pulse = s.pulse;
      pulse.omega_s = w;
      // Both regions share the retarded time t - |x|/v_g.
      const cplx carrier = std::exp(-kI * (w * (t - x / s.params.v_g)));
      const cplx plane_f = transmission(s.params, w) * carrier;
      const cplx plane_b = reflection(s.params, w) * carrier;
      worst = std::max(worst, std::abs(forward_field({x, t}, s.params, pulse).u_over_A - plane_f));
      worst = std::max(worst, std::abs(backward_field({-x, t}, s.params, pulse).u_over_A - plane_b));
    }
    return make_check("stationary_recovery", worst, 1e-2);
  });
}

std::vector<double> mode_sum_times() {
  std::vector<double> ts;
  for (int i = 0; i <= 20; ++i) ts.push_back(0.5 * i);
  for (Direction d : {Direction::forward, Direction::backward}) {
    for (const auto& p : mode_sum_probes(d)) ts.push_back(p.t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

void add_mode_sum_checks(std::vector<CheckResult>& out) {
  const SystemParams desk{200.0, 1.0, 0.0, 0.0, 1.0};
  PulseSpec pulse;
  pulse.omega_s = desk.omega_q + desk.gamma_rad;
  pulse.delta = 1e-3 * desk.gamma_rad;
  const auto cfg = oracle::ModeSumConfig::desk_scale(desk);
  oracle::Trajectory traj;
  try {
    traj = oracle::mode_sum_simulate(pulse, desk, cfg, mode_sum_times());
  } catch (const Error& e) {
    for (const char* name : {"mode_sum_beta", "mode_sum_norm", "mode_sum_forward_field",
                             "mode_sum_backward_field"}) {
      CheckResult c;
      c.name = name;
      c.measured = std::numeric_limits<double>::infinity();
      c.detail = e.what();
      out.push_back(c);
    }
    return;
  }

  const auto residual = oracle::wigner_weisskopf_residual(traj);
  double worst_beta = 0.0;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    if (traj.times[i] < 0.5 || traj.times[i] > 10.0 + 1e-9) continue;
    worst_beta = std::max(worst_beta, residual[i] / std::abs(qubit_beta(pulse, desk, traj.times[i])));
  }
  out.push_back(make_check("mode_sum_beta", worst_beta, 1e-2));

  double drift = 0.0;
  for (double n : traj.norm) drift = std::max(drift, std::abs(n - traj.norm.front()));
  const double span = desk.gamma_rad * traj.times.back();
  out.push_back(make_check("mode_sum_norm", drift / std::max(span, 1.0), 1e-8));

  for (Direction d : {Direction::forward, Direction::backward}) {
    double worst = 0.0;
    for (const auto& p : mode_sum_probes(d)) {
      const cplx closed = field(d, p, desk, pulse).u_over_A;
      worst = std::max(worst, relative(oracle::reconstruct_field(traj, p, d), closed));
    }
    out.push_back(make_check(std::string("mode_sum_") + to_string(d) + "_field", worst, 2e-2));
  }
}

}  // namespace

std::vector<SpaceTimePoint> oracle_grid(const SystemParams& params, Direction direction) {
  (void)params;
  const double xs[] = {0.5e-3, 2e-3, 8e-3, 25e-3, 60e-3};
  const double ts[] = {0.3e-9, 0.8e-9, 1.5e-9, 3e-9, 5e-9};
  std::vector<SpaceTimePoint> out;
  for (double x : xs) {
    for (double t : ts) out.push_back({direction == Direction::forward ? x : -x, t});
  }
  return out;
}

std::vector<SpaceTimePoint> mode_sum_probes(Direction direction) {
  const double pts[10][2] = {{1.0, 3.0}, {2.0, 4.0}, {3.0, 5.0}, {4.0, 8.0}, {1.5, 3.5},
                             {2.5, 5.0}, {1.0, 5.0}, {3.0, 6.0}, {2.0, 6.0}, {4.0, 6.0}};
  std::vector<SpaceTimePoint> out;
  for (const auto& p : pts) {
    out.push_back({direction == Direction::forward ? p[0] : -p[0], p[1]});
  }
  return out;
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string ValidationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["passed"] = passed();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["measured"] = std::isfinite(c.measured) ? nlohmann::ordered_json(c.measured) : nullptr;
    j["tolerance"] = c.tolerance;
    if (!c.detail.empty()) j["detail"] = c.detail;
    list.push_back(std::move(j));
  }
  doc["checks"] = std::move(list);
  return doc.dump(2) + "\n";
}

ValidationReport cmd_validate(const Scenario& s, const ValidationOptions& options) {
  ValidationReport report;
  auto& out = report.checks;
  out.push_back(check_resonance(s.params));
  out.push_back(check_unitarity(s.params));
  for (auto k : {oracle::Kernel::I1, oracle::Kernel::I2, oracle::Kernel::J1, oracle::Kernel::J2}) {
    out.push_back(check_oracle(k, s, options.kernels));
  }
  out.push_back(check_principal_value(s));
  out.push_back(check_causality(s));
  out.push_back(check_decomposition(s));
  out.push_back(check_length_independence(s));
  out.push_back(check_stationary_recovery(s));
  if (options.include_mode_sum) add_mode_sum_checks(out);
  return report;
}

}  // namespace wgqed
