#include "wgqed/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "wgqed/errors.hpp"

namespace wgqed {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& value, const std::string& key, std::size_t line) {
  double out = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
    throw ParseError("value of '" + key + "' is not a finite number: '" + value + "'", line);
  }
  return out;
}

std::size_t to_count(const std::string& value, const std::string& key, std::size_t line) {
  std::size_t out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("value of '" + key + "' is not a non-negative integer: '" + value + "'",
                     line);
  }
  return out;
}

bool to_bool(const std::string& value, const std::string& key, std::size_t line) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ParseError("value of '" + key + "' is not a boolean: '" + value + "'", line);
}

using Setter = std::function<void(Scenario&, const std::string&, std::size_t)>;

const std::map<std::string, Setter>& setters() {
  constexpr double kGHz = kTwoPi * 1e9;
  constexpr double kMHz = kTwoPi * 1e6;
  auto real = [](double scale, auto member) -> Setter {
    return [scale, member](Scenario& s, const std::string& v, std::size_t line) {
      member(s) = scale * to_double(v, "", line);
    };
  };
  auto count = [](auto member) -> Setter {
    return [member](Scenario& s, const std::string& v, std::size_t line) {
      member(s) = to_count(v, "", line);
    };
  };
  static const std::map<std::string, Setter> table = {
      {"omega_q_ghz", real(kGHz, [](Scenario& s) -> double& { return s.params.omega_q; })},
      {"gamma_rad_ghz", real(kGHz, [](Scenario& s) -> double& { return s.params.gamma_rad; })},
      {"gamma_phi_ghz", real(kGHz, [](Scenario& s) -> double& { return s.params.gamma_phi; })},
      {"gamma_loss_ghz", real(kGHz, [](Scenario& s) -> double& { return s.params.gamma_loss; })},
      {"v_g", real(1.0, [](Scenario& s) -> double& { return s.params.v_g; })},
      {"omega_s_ghz", real(kGHz, [](Scenario& s) -> double& { return s.pulse.omega_s; })},
      {"pulse_width_mhz", real(kMHz, [](Scenario& s) -> double& { return s.pulse.delta; })},
      {"length_m", real(1.0, [](Scenario& s) -> double& { return s.pulse.length; })},
      {"rabi_ghz", real(kGHz, [](Scenario& s) -> double& { return s.drive.rabi; })},
      {"x_min_mm", real(1e-3, [](Scenario& s) -> double& { return s.grid.x_min; })},
      {"x_max_mm", real(1e-3, [](Scenario& s) -> double& { return s.grid.x_max; })},
      {"x_steps", count([](Scenario& s) -> std::size_t& { return s.grid.x_steps; })},
      {"t_min_ns", real(1e-9, [](Scenario& s) -> double& { return s.grid.t_min; })},
      {"t_max_ns", real(1e-9, [](Scenario& s) -> double& { return s.grid.t_max; })},
      {"t_steps", count([](Scenario& s) -> std::size_t& { return s.grid.t_steps; })},
      {"omega_ratio_min", real(1.0, [](Scenario& s) -> double& { return s.frequencies.ratio_min; })},
      {"omega_ratio_max", real(1.0, [](Scenario& s) -> double& { return s.frequencies.ratio_max; })},
      {"omega_ratio_steps", count([](Scenario& s) -> std::size_t& { return s.frequencies.steps; })},
      {"x_mm", real(1e-3, [](Scenario& s) -> double& { return s.x; })},
      {"t_ns", real(1e-9, [](Scenario& s) -> double& { return s.t; })},
      {"large_t_ns", real(1e-9, [](Scenario& s) -> double& { return s.large_t; })},
      {"x0_mm", real(1e-3, [](Scenario& s) -> double& { return s.x0; })},
      {"t0_ps", real(1e-12, [](Scenario& s) -> double& { return s.t0; })},
      {"series_t_max_ns", real(1e-9, [](Scenario& s) -> double& { return s.series_t_max; })},
      {"series_steps", count([](Scenario& s) -> std::size_t& { return s.series_steps; })},
      {"direction",
       [](Scenario& s, const std::string& v, std::size_t line) {
         if (v == "forward") {
           s.grid.direction = Direction::forward;
         } else if (v == "backward") {
           s.grid.direction = Direction::backward;
         } else {
           throw ParseError("direction must be 'forward' or 'backward', got '" + v + "'", line);
         }
       }},
      {"lossy",
       [](Scenario& s, const std::string& v, std::size_t line) {
         s.losses = to_bool(v, "lossy", line) ? Losses::included : Losses::excluded;
       }},
      {"threads",
       [](Scenario& s, const std::string& v, std::size_t line) {
         s.threads = static_cast<int>(to_count(v, "threads", line));
       }},
  };
  return table;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

}  // namespace

void Scenario::validate() const {
  params.validate();
  pulse.validate();
  drive.validate();
  require(grid.x_steps >= 2, "x_steps must be at least 2");
  require(grid.t_steps >= 2, "t_steps must be at least 2");
  require(grid.x_min < grid.x_max, "x range must be increasing (x_min < x_max)");
  require(grid.t_min < grid.t_max, "t range must be increasing (t_min < t_max)");
  require(grid.t_min >= 0.0, "t_min must be >= 0");
  require(frequencies.steps >= 2, "omega_ratio_steps must be at least 2");
  require(frequencies.ratio_min > 0.0 && frequencies.ratio_min < frequencies.ratio_max,
          "omega ratio range must be positive and increasing");
  require(x0 != 0.0, "x0 must be nonzero");
  require(t0 >= 0.0 && t0 < series_t_max, "series time range must satisfy 0 <= t0 < t_max");
  require(series_steps >= 2, "series_steps must be at least 2");
  require(t > 0.0, "t must be > 0");
  require(large_t > 0.0, "large_t must be > 0");
  require(x != 0.0, "x must be nonzero");
}

Scenario parse_config_text(const std::string& text) {
  Scenario s;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  bool omega_s_given = false;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line);
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    if (key.empty()) throw ParseError("empty key", line);
    if (value.empty()) throw ParseError("empty value for '" + key + "'", line);
    const auto it = setters().find(key);
    if (it == setters().end()) throw ParseError("unknown key '" + key + "'", line);
    try {
      it->second(s, value, line);
    } catch (const ParseError&) {
      throw ParseError("invalid value '" + value + "' for '" + key + "'", line);
    }
    if (key == "omega_s_ghz") omega_s_given = true;
  }
  if (!omega_s_given) s.pulse.omega_s = s.params.omega_q;
  s.drive.omega_s = s.pulse.omega_s;
  s.validate();
  return s;
}

Scenario parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace wgqed
