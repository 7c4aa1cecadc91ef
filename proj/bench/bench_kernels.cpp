// Serial vs OpenMP kernels on a blob of markers. Run with OMP_NUM_THREADS set.

#include <benchmark/benchmark.h>

#include <cmath>

#include "vp25/fieldsolve/grid.hpp"
#include "vp25/fieldsolve/interp.hpp"
#include "vp25/kernels/backward.hpp"
#include "vp25/kernels/convolution.hpp"
#include "vp25/kernels/particles.hpp"
#include "vp25/kinetic/ensemble.hpp"
#include "vp25/pusher/field_history.hpp"

using namespace vp25;

namespace {

double blob(const PhasePoint& z) {
  const double r2 = dot(z.x, z.x) / 0.16;
  const double p2 = dot(z.p, z.p) / 0.25;
  if (r2 >= 1.0 || p2 >= 1.0) return 0.0;
  return (1.0 - r2) * (1.0 - p2);
}

MarkerEnsemble markers(int n_x) {
  const LatticeBox b{0.4, n_x, 0.5, 12};
  return init_ensemble(blob, {b, b}, 1);
}

const ExternalField& field() {
  static const ExternalField f = ExternalField::theta_pinch(polynomial({0.0, 0.5, 0.0, 3.0}));
  return f;
}

template <bool Parallel>
void BM_deposit(benchmark::State& state) {
  MarkerEnsemble e = markers(static_cast<int>(state.range(0)));
  const Grid2D g = Grid2D::centered(128, 1.0);
  const GridGeometry geo = GridGeometry::of(g);
  std::vector<double> rho(g.node_count());
  for (auto _ : state) {
    std::fill(rho.begin(), rho.end(), 0.0);
    const auto span = e[Species::plus].span(Species::plus);
    if constexpr (Parallel)
      kernels::omp::deposit(span, geo, rho);
    else
      kernels::serial::deposit(span, geo, rho);
    benchmark::DoNotOptimize(rho.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(e[Species::plus].size()));
}

template <bool Parallel>
void BM_kick(benchmark::State& state) {
  MarkerEnsemble e = markers(static_cast<int>(state.range(0)));
  const Grid2D g = Grid2D::centered(128, 1.0);
  const GridGeometry geo = GridGeometry::of(g);
  std::vector<double> ex(g.node_count(), 1e-3), ey(g.node_count(), -1e-3);
  for (auto _ : state) {
    const auto span = e[Species::minus].span(Species::minus);
    if constexpr (Parallel)
      kernels::omp::kick(span, geo, ex, ey, field(), 1e-3);
    else
      kernels::serial::kick(span, geo, ex, ey, field(), 1e-3);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(e[Species::minus].size()));
}

template <bool Parallel>
void BM_backward(benchmark::State& state) {
  const Grid2D g = Grid2D::centered(64, 1.0);
  const GridGeometry geo = GridGeometry::of(g);
  const double dt = 0.02;
  FieldHistory hist(geo, dt, field(), 0.0, 1);
  for (int k = 0; k < 50; ++k)
    hist.push_step(std::vector<double>(g.node_count(), 1e-3), std::vector<double>(g.node_count(), 0.0));
  std::vector<PhasePoint> pts;
  const int n = static_cast<int>(state.range(0));
  for (int i = 0; i < n; ++i) {
    const double a = 0.1 * i;
    pts.push_back({{0.3 * std::cos(a), 0.3 * std::sin(a)}, {0.1, -0.2, 0.05}, i % 2 ? Species::plus : Species::minus});
  }
  std::vector<double> values;
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::omp::backward_values(pts, blob, hist, 1.0, values);
    else
      kernels::serial::backward_values(pts, blob, hist, 1.0, values);
    benchmark::DoNotOptimize(values.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}

template <bool Parallel>
void BM_direct_field(benchmark::State& state) {
  Grid2D g = Grid2D::centered(static_cast<int>(state.range(0)), 1.0);
  g.rho.assign(g.node_count(), 0.0);
  for (int j = 1; j < g.ny; ++j)
    for (int i = 1; i < g.nx; ++i) g.rho[g.index(i, j)] = std::exp(-4.0 * dot(g.node(i, j), g.node(i, j)));
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::omp::direct_field(g);
    else
      kernels::serial::direct_field(g);
    benchmark::DoNotOptimize(g.U.data());
  }
}

}  // namespace

BENCHMARK(BM_deposit<false>)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_deposit<true>)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kick<false>)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kick<true>)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_backward<false>)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_backward<true>)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_direct_field<false>)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_direct_field<true>)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
