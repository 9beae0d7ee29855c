// Command-line front end: figure data as CSV/JSON and the validation suite.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wgqed/commands.hpp"
#include "wgqed/config.hpp"
#include "wgqed/errors.hpp"

namespace {

enum Exit { kOk = 0, kValidationFailed = 1, kConfigError = 2, kConvergenceFailed = 3 };

bool write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-photon scattering off a qubit in a 1D waveguide"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  int threads = -1;
  bool lossy = false;
  app.add_option("--config", config_path, "Scenario file (key = value lines)");
  app.add_option("--out", out_path, "Output file (default: stdout)");
  app.add_option("--threads", threads, "Worker threads (default: all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--lossy", lossy, "Include dephasing and intrinsic loss in the qubit frequency");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  const char* names[] = {"afc", "map2d", "timeseries", "spatial", "asymptotics", "validate"};
  const char* help[] = {
      "Large-time transmittance/reflectance versus probe frequency",
      "Intensity over position and probe frequency at a fixed time",
      "Intensity versus time at a fixed point, with the fitted oscillation frequency",
      "Off-resonance transmittance/reflectance versus distance",
      "Full versus asymptotic far field",
      "Run the invariant and oracle suite; JSON report"};
  for (int i = 0; i < 6; ++i) app.add_subcommand(names[i], help[i])->fallthrough();

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  wgqed::Scenario scenario;
  try {
    scenario = config_path.empty() ? wgqed::parse_config_text("")
                                   : wgqed::parse_config(config_path);
  } catch (const wgqed::ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const wgqed::ValidationError& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return kConfigError;
  }
  if (threads >= 0) scenario.threads = threads;
  if (lossy) scenario.losses = wgqed::Losses::included;

  try {
    if (command == "validate") {
      const auto report = wgqed::cmd_validate(scenario);
      if (!write_output(report.to_json(), out_path)) return kConfigError;
      return report.passed() ? kOk : kValidationFailed;
    }

    wgqed::Table table;
    if (command == "afc") table = wgqed::cmd_afc(scenario);
    else if (command == "map2d") table = wgqed::cmd_map2d(scenario);
    else if (command == "timeseries") table = wgqed::cmd_timeseries(scenario);
    else if (command == "spatial") table = wgqed::cmd_spatial(scenario);
    else table = wgqed::cmd_asymptotics(scenario);

    const std::string text = format == "json" ? wgqed::to_json(table) : wgqed::to_csv(table);
    if (!write_output(text, out_path)) {
      std::cerr << "cannot write " << out_path << '\n';
      return kConfigError;
    }
    for (const auto& row : table.rows) {
      if (row.skip_reason == wgqed::reason::kConvergence) return kConvergenceFailed;
    }
    return kOk;
  } catch (const wgqed::ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return kConvergenceFailed;
  } catch (const wgqed::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kConfigError;
  }
}
