// Serial reference vs OpenMP kernels and full Poisson solves.
//   ./bench_elliptic --benchmark_filter=Solve
//   OMP_NUM_THREADS=4 ./bench_elliptic

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "flatpipe/domain.hpp"
#include "flatpipe/elliptic.hpp"
#include "flatpipe/kernels.hpp"

namespace {

using namespace flatpipe;

Grid grid_for(int scale) {
  Geometry g;
  return build_grid(g, 44 * scale, 30 * scale);
}

ScalarField cos_source(const Grid& grid) {
  ScalarField s = ScalarField::zeros(grid);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      s.values[grid.index(i, j)] = std::cos(std::numbers::pi * grid.x_center(i) / grid.length) *
                                   std::cos(std::numbers::pi * grid.y_center(j) / grid.width);
    }
  }
  return s;
}

// Evaporator/condenser flux of a half-width hot spot: the production workload.
// (cos_source is a discrete eigenvector, which CG solves in one step.)
ScalarField hot_spot_source(const Grid& grid) {
  Geometry g;
  g.evaporator.width = 0.5 * g.width;
  g.evaporator.y0 = 0.25 * g.width;
  const MassFluxField flux = phase_change_flux(grid, g, 10.0, 2.3e6);
  return ScalarField{grid, flux.values, false};
}

template <class Apply>
void run_stencil(benchmark::State& state, Apply apply) {
  const Grid grid = grid_for(static_cast<int>(state.range(0)));
  const kernels::Stencil st{grid.nx, grid.ny, 1.0 / (grid.dx * grid.dx), 1.0 / (grid.dy * grid.dy)};
  std::vector<double> u = cos_source(grid).values;
  std::vector<double> out(u.size());
  for (auto _ : state) {
    apply(st, u, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(u.size()));
}

void BM_StencilSerial(benchmark::State& state) { run_stencil(state, kernels::serial::apply_neg_laplacian); }
void BM_StencilOmp(benchmark::State& state) { run_stencil(state, kernels::omp::apply_neg_laplacian); }

template <class Dot>
void run_dot(benchmark::State& state, Dot dot) {
  const Grid grid = grid_for(static_cast<int>(state.range(0)));
  const std::vector<double> a = cos_source(grid).values;
  for (auto _ : state) benchmark::DoNotOptimize(dot(a, a));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(a.size()));
}

void BM_DotSerial(benchmark::State& state) { run_dot(state, kernels::serial::dot); }
void BM_DotOmp(benchmark::State& state) { run_dot(state, kernels::omp::dot); }

void run_solve(benchmark::State& state, Backend backend) {
  const Grid grid = grid_for(static_cast<int>(state.range(0)));
  const ScalarField source = hot_spot_source(grid);
  SolverOptions opts;
  opts.backend = backend;
  SolveStats stats;
  for (auto _ : state) {
    ScalarField u = solve_poisson_neumann(grid, source, opts, &stats);
    benchmark::DoNotOptimize(u.values.data());
  }
  state.counters["cg_iterations"] = stats.iterations;
}

void BM_SolveSerial(benchmark::State& state) { run_solve(state, Backend::Serial); }
void BM_SolveOmp(benchmark::State& state) { run_solve(state, Backend::OpenMP); }

}  // namespace

BENCHMARK(BM_StencilSerial)->Arg(1)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_StencilOmp)->Arg(1)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_DotSerial)->Arg(1)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_DotOmp)->Arg(1)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_SolveSerial)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveOmp)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
