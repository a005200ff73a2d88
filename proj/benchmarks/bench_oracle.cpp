// Exact orthogonality oracle at two scales: the 8-qubit signed code at
// t = 1 (19,900 state pairs) and the {14,6,3}+ code at t = 1 (~3.8M pairs,
// near the oracle's volume cap).

#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "qec/cssplus.hpp"
#include "qec/qstate.hpp"
#include "qec/registry.hpp"

using namespace qec;

static void BM_oracle_eight_qubit(benchmark::State& state) {
  SignedCode code = to_signed(*bench::reg().find("steane-8-3-3"));
  ErrorBudget budget = ErrorBudget::joint(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_orthogonal(code, budget));
  }
  state.counters["pairs"] =
      static_cast<double>(verify_orthogonal(code, budget).pair_count);
}
BENCHMARK(BM_oracle_eight_qubit)->Unit(benchmark::kMillisecond);

static void BM_oracle_plus_14_6(benchmark::State& state) {
  SignedCode code =
      SignedCode::all_plus(to_plus(*bench::reg().find("plus-14-6-3")));
  ErrorBudget budget = ErrorBudget::joint(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_orthogonal(code, budget));
  }
  state.counters["pairs"] =
      static_cast<double>(verify_orthogonal(code, budget).pair_count);
}
BENCHMARK(BM_oracle_plus_14_6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
