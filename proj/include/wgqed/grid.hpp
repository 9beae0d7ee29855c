#pragma once

// Row-major grid evaluation. Every cell is an independent call, so the
// OpenMP path produces results identical to the serial reference.

#include <cstddef>
#include <vector>

#include <omp.h>

namespace wgqed {

enum class Execution { serial, parallel };

/// Threads used by Execution::parallel when `threads` is not positive.
inline int default_threads() { return omp_get_max_threads(); }

/// out[r * cols + c] = cell(r, c).
template <class Cell, class F>
std::vector<Cell> evaluate_grid(std::size_t rows, std::size_t cols, F&& cell,
                                Execution exec = Execution::parallel, int threads = 0) {
  std::vector<Cell> out(rows * cols);
  if (exec == Execution::serial) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) out[r * cols + c] = cell(r, c);
    }
    return out;
  }
  const int n = threads > 0 ? threads : default_threads();
  const long long total_rows = static_cast<long long>(rows);
#pragma omp parallel for schedule(dynamic) num_threads(n)
  for (long long r = 0; r < total_rows; ++r) {
    const std::size_t row = static_cast<std::size_t>(r);
    for (std::size_t c = 0; c < cols; ++c) out[row * cols + c] = cell(row, c);
  }
  return out;
}

/// Evenly spaced values including both ends; steps >= 2.
inline std::vector<double> linspace(double lo, double hi, std::size_t steps) {
  std::vector<double> v(steps);
  if (steps == 1) {
    v[0] = lo;
    return v;
  }
  const double h = (hi - lo) / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) v[i] = lo + h * static_cast<double>(i);
  if (steps > 1) v.back() = hi;
  return v;
}

}  // namespace wgqed
