// Codeword-sweep minimum distance at two scales: the [23,12] Golay code
// (4096 codewords) and the 22-dimensional null space of the length-27
// cyclic check matrix (~4.2M codewords, the largest sweep the registry
// pipeline performs).

#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "qec/codes.hpp"
#include "qec/registry.hpp"

using namespace qec;

// min_distance() memoizes, so the benchmarks drive the underlying sweep.

static void BM_mindist_golay(benchmark::State& state) {
  LinearCode code = to_linear(*bench::reg().find("golay-23-12-7"));
  BitWord zero(code.n());
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_weight_in_coset(code.generator(), zero));
  }
}
BENCHMARK(BM_mindist_golay)->Unit(benchmark::kMicrosecond);

static void BM_mindist_cyclic27_null(benchmark::State& state) {
  LinearCode code =
      LinearCode::from_check(to_linear(*bench::reg().find("cyclic-27")).check());
  BitWord zero(code.n());
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_weight_in_coset(code.generator(), zero));
  }
}
BENCHMARK(BM_mindist_cyclic27_null)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
