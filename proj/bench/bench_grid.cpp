#include <benchmark/benchmark.h>

#include "wgqed/commands.hpp"
#include "wgqed/config.hpp"
#include "wgqed/field_kernels.hpp"
#include "wgqed/grid.hpp"
#include "wgqed/oracle.hpp"

using namespace wgqed;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

void BM_ForwardFieldGrid(benchmark::State& state) {
  const SystemParams p;
  PulseSpec pulse;
  pulse.omega_s = 1.01 * p.omega_q;
  const auto xs = linspace(1e-3, 1.4, 256);
  const auto ts = linspace(5e-9, 50e-9, 64);
  for (auto _ : state) {
    auto out = evaluate_grid<cplx>(
        xs.size(), ts.size(),
        [&](std::size_t i, std::size_t j) {
          return forward_field({xs[i], ts[j]}, p, pulse).u_over_A;
        },
        mode(state));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * xs.size() * ts.size());
  label(state);
}

void BM_Map2d(benchmark::State& state) {
  const Scenario s = parse_config_text("x_steps = 200\nomega_ratio_steps = 101\n");
  for (auto _ : state) {
    Table t = cmd_map2d(s, mode(state));
    benchmark::DoNotOptimize(t.rows.data());
  }
  label(state);
}

void BM_OracleGrid(benchmark::State& state) {
  const SystemParams p;
  PulseSpec pulse;
  const auto grid = oracle_grid(p, Direction::forward);
  for (auto _ : state) {
    auto out = evaluate_grid<cplx>(
        grid.size(), 1,
        [&](std::size_t i, std::size_t) {
          return oracle::quadrature_kernel(oracle::Kernel::I1, grid[i], p, pulse, {});
        },
        mode(state));
    benchmark::DoNotOptimize(out.data());
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_ForwardFieldGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Map2d)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
