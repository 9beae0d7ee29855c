#include "wgqed/commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "wgqed/errors.hpp"
#include "wgqed/oscillation.hpp"

namespace wgqed {
namespace {

using Values = std::vector<std::optional<double>>;

// Runs `body`; returns the reason code of a numerical failure, empty on success.
template <class F>
std::string guarded(F&& body) {
  try {
    body();
    return {};
  } catch (const DomainError& e) {
    return e.code();
  } catch (const PreconditionError&) {
    return reason::kPrecondition;
  } catch (const ConvergenceError&) {
    return reason::kConvergence;
  }
}

void append(Table& table, std::vector<Table::Row>&& rows) {
  for (auto& r : rows) table.rows.push_back(std::move(r));
}

double stationary_intensity(const SystemParams& params, double omega_s, Direction d,
                            Losses losses) {
  return d == Direction::forward ? std::norm(transmission(params, omega_s, losses))
                                 : std::norm(reflection(params, omega_s, losses));
}

}  // namespace

Table cmd_afc(const Scenario& s, Execution exec) {
  Table table;
  table.columns = {"omega_over_Omega", "transmittance", "reflectance", "stationary_T2",
                   "stationary_R2"};
  table.notes = {{"x_mm", format_number(std::abs(s.x) * 1e3)},
                 {"t_ns", format_number(s.large_t * 1e9)}};
  const auto ratios = linspace(s.frequencies.ratio_min, s.frequencies.ratio_max,
                               s.frequencies.steps);
  const double x = std::abs(s.x);
  auto rows = evaluate_grid<Table::Row>(
      ratios.size(), 1,
      [&](std::size_t r, std::size_t) {
        PulseSpec pulse = s.pulse;
        pulse.omega_s = ratios[r] * s.params.omega_q;
        Values v(5);
        v[0] = ratios[r];
        v[3] = std::norm(transmission(s.params, pulse.omega_s, s.losses));
        v[4] = std::norm(reflection(s.params, pulse.omega_s, s.losses));
        std::string why = guarded([&] {
          v[1] = std::norm(forward_field_large_time(x, s.params, pulse, s.large_t, s.losses));
          v[2] = std::norm(backward_field_large_time(-x, s.params, pulse, s.large_t, s.losses));
        });
        return Table::Row{std::move(v), std::move(why)};
      },
      exec, s.threads);
  append(table, std::move(rows));
  return table;
}

Table cmd_map2d(const Scenario& s, Execution exec) {
  Table table;
  table.columns = {"x_mm", "omega_over_Omega", "intensity", "stationary"};
  table.notes = {{"direction", to_string(s.grid.direction)},
                 {"t_ns", format_number(s.t * 1e9)}};
  const auto xs = linspace(s.grid.x_min, s.grid.x_max, s.grid.x_steps);
  const auto ratios = linspace(s.frequencies.ratio_min, s.frequencies.ratio_max,
                               s.frequencies.steps);
  auto rows = evaluate_grid<Table::Row>(
      xs.size(), ratios.size(),
      [&](std::size_t i, std::size_t j) {
        PulseSpec pulse = s.pulse;
        pulse.omega_s = ratios[j] * s.params.omega_q;
        Values v(4);
        v[0] = xs[i] * 1e3;
        v[1] = ratios[j];
        v[3] = stationary_intensity(s.params, pulse.omega_s, s.grid.direction, s.losses);
        std::string why = guarded([&] {
          v[2] = std::norm(
              field(s.grid.direction, {xs[i], s.t}, s.params, pulse, s.losses).u_over_A);
        });
        return Table::Row{std::move(v), std::move(why)};
      },
      exec, s.threads);
  append(table, std::move(rows));
  return table;
}

Table cmd_timeseries(const Scenario& s) {
  Table table;
  table.columns = {"t_ns", "intensity", "stationary"};
  const Direction dir = s.x0 > 0.0 ? Direction::forward : Direction::backward;
  const double carrier_period = kTwoPi / s.pulse.omega_s;
  const double nominal = (s.series_t_max - s.t0) / static_cast<double>(s.series_steps - 1);
  const double step = std::max(1.0, std::round(nominal / carrier_period)) * carrier_period;
  const double stationary = stationary_intensity(s.params, s.pulse.omega_s, dir, s.losses);

  std::vector<double> times;
  std::vector<double> values;
  for (std::size_t i = 0;; ++i) {
    const double t = s.t0 + step * static_cast<double>(i);
    if (t > s.series_t_max) break;
    Values v(3);
    v[0] = t * 1e9;
    v[2] = stationary;
    std::string why = guarded([&] {
      v[1] = std::norm(field(dir, {s.x0, t}, s.params, s.pulse, s.losses).u_over_A);
    });
    if (why.empty()) {
      times.push_back(t);
      values.push_back(*v[1]);
    }
    table.add(std::move(v), std::move(why));
  }

  const double detuning = s.pulse.omega_s - s.params.omega_q;
  table.notes = {{"direction", to_string(dir)},
                 {"x0_mm", format_number(s.x0 * 1e3)},
                 {"time_step_ns", format_number(step * 1e9)},
                 {"detuning_rad_per_s", format_number(detuning)}};
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  const auto fit = fit_oscillation(times, values, kPeakProminence * scale, kMinPeaks);
  if (fit) {
    table.notes.emplace_back("fitted_frequency_rad_per_s", format_number(fit->angular_frequency));
    table.notes.emplace_back("peaks", std::to_string(fit->peaks.size()));
  } else {
    table.notes.emplace_back("fitted_frequency_rad_per_s", "none");
    table.notes.emplace_back("peaks", "0");
  }
  return table;
}

Table cmd_spatial(const Scenario& s, Execution exec) {
  Table table;
  table.columns = {"x_mm",         "x_over_lambda",  "transmittance",
                   "reflectance",  "envelope_upper", "envelope_lower",
                   "asymptotic_transmittance", "asymptotic_reflectance", "stationary_T2",
                   "stationary_R2", "field_transmittance", "field_reflectance"};
  PulseSpec pulse = s.pulse;
  pulse.omega_s = s.params.omega_q + 0.5 * s.params.gamma_rad;
  const double lambda = s.params.wavelength();
  table.notes = {{"omega_s_rad_per_s", format_number(pulse.omega_s)},
                 {"lambda_mm", format_number(lambda * 1e3)},
                 {"t_ns", format_number(s.large_t * 1e9)}};
  const double t2 = std::norm(transmission(s.params, pulse.omega_s));
  const double r2 = std::norm(reflection(s.params, pulse.omega_s));
  const auto xs = linspace(s.grid.x_min, s.grid.x_max, s.grid.x_steps);

  auto rows = evaluate_grid<Table::Row>(
      xs.size(), 1,
      [&](std::size_t i, std::size_t) {
        const double x = std::abs(xs[i]);
        Values v(12);
        v[0] = x * 1e3;
        v[1] = x / lambda;
        v[8] = t2;
        v[9] = r2;
        std::string why = guarded([&] {
          v[2] = offres_intensity(x, s.params, pulse, Direction::forward);
          v[3] = offres_intensity(-x, s.params, pulse, Direction::backward);
          const double a_lambda = kTwoPi * x / lambda;
          const double envelope = 1.0 / (kTwoPi * a_lambda);
          v[4] = 0.5 + envelope;
          v[5] = 0.5 - envelope;
          // Large-argument form i ci(a) + si(a) ~ -e^{-ia}/a.
          const double a = pulse.omega_s * x / s.params.v_g;
          const cplx w = -std::exp(-kI * a) / (kTwoPi * a);
          v[6] = 0.5 * std::norm(1.0 - w);
          v[7] = 0.5 * std::norm(1.0 + w);
          v[10] = std::norm(forward_field_large_time(x, s.params, pulse, s.large_t));
          v[11] = std::norm(backward_field_large_time(-x, s.params, pulse, s.large_t));
        });
        return Table::Row{std::move(v), std::move(why)};
      },
      exec, s.threads);
  append(table, std::move(rows));
  return table;
}

Table cmd_asymptotics(const Scenario& s, Execution exec) {
  Table table;
  table.columns = {"x_mm",          "t_ns",          "full_re",        "full_im",
                   "asymptotic_re", "asymptotic_im", "scattered_abs",  "asymptotic_error",
                   "correction_scale"};
  table.notes = {{"direction", to_string(s.grid.direction)}};
  const auto xs = linspace(s.grid.x_min, s.grid.x_max, s.grid.x_steps);
  const auto ts = linspace(s.grid.t_min, s.grid.t_max, s.grid.t_steps);
  auto rows = evaluate_grid<Table::Row>(
      xs.size(), ts.size(),
      [&](std::size_t i, std::size_t j) {
        const SpaceTimePoint p{xs[i], ts[j]};
        Values v(9);
        v[0] = p.x * 1e3;
        v[1] = p.t * 1e9;
        std::string why = guarded([&] {
          const FieldSample full = field(s.grid.direction, p, s.params, s.pulse, s.losses);
          const AsymptoticField asym =
              asymptotic_field(p, s.params, s.pulse, s.grid.direction, s.losses);
          v[2] = full.u_over_A.real();
          v[3] = full.u_over_A.imag();
          v[4] = asym.u_over_A.real();
          v[5] = asym.u_over_A.imag();
          v[6] = std::abs(full.u_over_A - full.stationary);
          v[7] = std::abs(full.u_over_A - asym.u_over_A);
          v[8] = asym.correction_scale;
        });
        return Table::Row{std::move(v), std::move(why)};
      },
      exec, s.threads);
  append(table, std::move(rows));
  return table;
}

}  // namespace wgqed
