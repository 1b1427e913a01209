// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "atqft/kernels.hpp"
#include "atqft/manifolds.hpp"

namespace {

using namespace atqft;

// Torsion (k, k, k) from three lens-space chain blocks, so the form has
// off-diagonal structure after the invariant-factor basis change.
IntegerForm cube_form(long k) {
  Manifold m = connected_sum(connected_sum(lens_space(k, 1), lens_space(k, k - 1 > 1 ? k - 2 : 1)),
                             lens_space(k, 1));
  return to_integer_form(linking_form(m), 1ULL << 40);
}

void BM_CsSerial(benchmark::State& state) {
  const IntegerForm f = cube_form(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::cs_phases_serial(f, 3));
}

void BM_CsParallel(benchmark::State& state) {
  const IntegerForm f = cube_form(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::cs_phases_parallel(f, 3));
}

void BM_BfSerial(benchmark::State& state) {
  const IntegerForm f = cube_form(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bf_phases_serial(f, 3));
}

void BM_BfParallel(benchmark::State& state) {
  const IntegerForm f = cube_form(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bf_phases_parallel(f, 3));
}

}  // namespace

BENCHMARK(BM_CsSerial)->Arg(9)->Arg(31)->Arg(61);
BENCHMARK(BM_CsParallel)->Arg(9)->Arg(31)->Arg(61);
BENCHMARK(BM_BfSerial)->Arg(5)->Arg(9);
BENCHMARK(BM_BfParallel)->Arg(5)->Arg(9);

BENCHMARK_MAIN();
