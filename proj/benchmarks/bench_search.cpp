// Sign-allocation search: the pruned linear-space search that recovers the
// 8-qubit allocation, and the exhaustive fallback on the 5-qubit skeleton
// (where the linear space provably contains no solution).

#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "qec/cssplus.hpp"
#include "qec/registry.hpp"
#include "qec/search.hpp"

using namespace qec;

static void BM_search_signs_eight_qubit(benchmark::State& state) {
  const RegistryRecord* rec = bench::reg().find("steane-8-3-3");
  ErrorBudget budget = ErrorBudget::joint(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_signs(*rec->gcos, *rec->disp, budget));
  }
  state.counters["nodes"] = static_cast<double>(
      search_signs(*rec->gcos, *rec->disp, budget).nodes_visited);
}
BENCHMARK(BM_search_signs_eight_qubit)->Unit(benchmark::kMillisecond);

static void BM_search_signs_five_qubit_exhaustive(benchmark::State& state) {
  const RegistryRecord* rec = bench::reg().find("laflamme-5-1-3");
  ErrorBudget budget = ErrorBudget::joint(1);
  SignSearchOptions opts;
  opts.exhaustive = true;
  opts.candidate_limit = 100000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        search_signs(*rec->gcos, *rec->disp, budget, opts));
  }
  state.counters["examined"] = static_cast<double>(
      search_signs(*rec->gcos, *rec->disp, budget, opts).candidates_examined);
}
BENCHMARK(BM_search_signs_five_qubit_exhaustive)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
