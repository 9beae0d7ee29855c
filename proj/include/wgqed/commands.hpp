#pragma once

// Figure data and the validation suite behind the command-line tool.

#include <functional>
#include <string>
#include <vector>

#include "wgqed/config.hpp"
#include "wgqed/grid.hpp"
#include "wgqed/table.hpp"

namespace wgqed {

/// Relative prominence used to pick intensity peaks in timeseries output.
inline constexpr double kPeakProminence = 1e-8;
/// Peaks needed before a frequency is reported.
inline constexpr int kMinPeaks = 3;

/// Large-time transmittance and reflectance at |x| versus omega_s / Omega.
Table cmd_afc(const Scenario& s, Execution exec = Execution::parallel);

/// |u/A|^2 at time t over x (rows) and omega_s / Omega (columns).
Table cmd_map2d(const Scenario& s, Execution exec = Execution::parallel);

/// |u(x0, t)/A|^2 from t0 on, with the fitted oscillation frequency as notes.
/// The time step is rounded to a whole number of carrier periods.
Table cmd_timeseries(const Scenario& s);

/// Off-resonance transmittance/reflectance versus distance at
/// omega_s = Omega + Gamma/2, with envelopes and large-distance forms.
Table cmd_spatial(const Scenario& s, Execution exec = Execution::parallel);

/// Full versus asymptotic field over the space-time grid.
Table cmd_asymptotics(const Scenario& s, Execution exec = Execution::parallel);

/// Kernels checked by the validation suite; replaceable for mutation tests.
struct KernelSet {
  std::function<cplx(const SpaceTimePoint&, const SystemParams&, Losses)> i1 =
      [](const SpaceTimePoint& p, const SystemParams& q, Losses l) { return kernel_i1(p, q, l); };
  std::function<cplx(const SpaceTimePoint&, const SystemParams&, double)> i2 =
      [](const SpaceTimePoint& p, const SystemParams& q, double w) { return kernel_i2(p, q, w); };
  std::function<cplx(const SpaceTimePoint&, const SystemParams&, Losses)> j1 =
      [](const SpaceTimePoint& p, const SystemParams& q, Losses l) { return kernel_j1(p, q, l); };
  std::function<cplx(const SpaceTimePoint&, const SystemParams&, double)> j2 =
      [](const SpaceTimePoint& p, const SystemParams& q, double w) { return kernel_j2(p, q, w); };
};

struct CheckResult {
  std::string name;
  double measured = 0.0;   ///< worst error found
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  std::string to_json() const;
};

struct ValidationOptions {
  KernelSet kernels;
  bool include_mode_sum = true;
};

/// Runs the invariant suite. Numerical failures, ConvergenceError included,
/// are reported as failed checks.
ValidationReport cmd_validate(const Scenario& s, const ValidationOptions& options = {});

/// Frozen probe points shared by the validation suite and the tests.
std::vector<SpaceTimePoint> oracle_grid(const SystemParams& params, Direction direction);
std::vector<SpaceTimePoint> mode_sum_probes(Direction direction);

}  // namespace wgqed
