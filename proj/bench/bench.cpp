// Serial reference vs OpenMP kernel, same inputs. Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include "zetanu/coeffs.hpp"
#include "zetanu/plot.hpp"
#include "zetanu/stencil.hpp"
#include "zetanu/zeros.hpp"

using namespace zetanu;

static void BM_log_divisor_coefficients(benchmark::State& st) {
  const bool par = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(log_divisor_coefficients(1'000'000, par));
}
BENCHMARK(BM_log_divisor_coefficients)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_build_table(benchmark::State& st) {
  const bool par = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(build_table(1'000'000, par));
}
BENCHMARK(BM_build_table)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_grid_nu(benchmark::State& st) {
  GridOptions go;
  go.parallel = st.range(0) != 0;
  go.probes = 0;
  for (auto _ : st) benchmark::DoNotOptimize(grid_nu({-4.0, 4.0, 20.0, 28.0}, 0.05, go));
}
BENCHMARK(BM_grid_nu)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_phase_image(benchmark::State& st) {
  GridOptions go;
  go.probes = 0;
  const NuGrid g = grid_nu({-9.5, 10.5, 0.0, 100.0}, 0.1, go);
  const bool par = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(phase_image(g, par));
}
BENCHMARK(BM_phase_image)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_localize(benchmark::State& st) {
  LocalizeOptions lo;
  lo.parallel = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(localize({-4.0, 5.0, 10.0, 50.0}, lo));
}
BENCHMARK(BM_localize)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
