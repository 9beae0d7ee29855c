#pragma once

// Scenario files: flat `key = value` lines, `#` starts a comment.
// Frequencies are given as f = omega / 2 pi in the unit named by the key
// suffix and stored in rad/s; lengths and times likewise carry their unit.

#include <cstddef>
#include <string>

#include "wgqed/field_kernels.hpp"
#include "wgqed/qubit_dynamics.hpp"
#include "wgqed/stationary.hpp"

namespace wgqed {

struct SpaceTimeGrid {
  double x_min = 1e-3;  ///< m
  double x_max = 60e-3;
  std::size_t x_steps = 60;
  double t_min = 0.3e-9;  ///< s
  double t_max = 5e-9;
  std::size_t t_steps = 25;
  Direction direction = Direction::forward;
};

struct FrequencyGrid {
  double ratio_min = 0.95;  ///< omega_s / Omega
  double ratio_max = 1.05;
  std::size_t steps = 201;
};

struct Scenario {
  SystemParams params;
  PulseSpec pulse;
  DriveSpec drive;
  SpaceTimeGrid grid;
  FrequencyGrid frequencies;
  double x = 5e-3;         ///< observation point of afc
  double t = 5e-9;         ///< fixed time of map2d
  double large_t = 1e-6;   ///< time of the large-time curves (afc, spatial)
  double x0 = 1e-3;        ///< observation point of timeseries
  double t0 = 10e-12;      ///< first time of timeseries
  double series_t_max = 1e-6;
  std::size_t series_steps = 4000;
  Losses losses = Losses::excluded;
  int threads = 0;  ///< 0 means all available cores

  /// Throws ValidationError naming the first violated invariant.
  void validate() const;
};

/// Throws ParseError (with line number) or ValidationError.
Scenario parse_config_text(const std::string& text);

/// Reads and parses `path`; an unreadable file is a ParseError at line 0.
Scenario parse_config(const std::string& path);

}  // namespace wgqed
