#include <benchmark/benchmark.h>

#include "hrmc/builder.hpp"
#include "hrmc/kformula.hpp"
#include "hrmc/oracle.hpp"
#include "hrmc/resistance.hpp"

using namespace hrmc;

namespace {

// Full resistance check on the optimal construction, one strategy per
// benchmark.  The interesting axis is how the strategies scale as the
// failure budget grows the enumeration space.

void check_realization(benchmark::State& state, Strategy strategy) {
  const auto m = state.range(0);
  const auto n = state.range(1);
  const Realization r = build_clique_realization(m, n);
  std::uint64_t pairs = 0;
  for (auto _ : state) {
    const CheckReport rep =
        check_highly_am_resistant(r.graph, r.coloring, r.scenario, {strategy});
    benchmark::DoNotOptimize(rep.verdict);
    pairs = rep.pairs_examined;
  }
  state.counters["pairs"] = static_cast<double>(pairs);
}

void BM_CheckExhaustive(benchmark::State& state) {
  check_realization(state, Strategy::exhaustive);
}
BENCHMARK(BM_CheckExhaustive)
    ->Args({4, 11})
    ->Args({8, 16})
    ->Args({8, 24})
    ->Args({10, 25})
    ->Unit(benchmark::kMillisecond);

void BM_CheckUnpruned(benchmark::State& state) {
  check_realization(state, Strategy::exhaustive_unpruned);
}
BENCHMARK(BM_CheckUnpruned)
    ->Args({4, 11})
    ->Args({8, 16})
    ->Unit(benchmark::kMillisecond);

void BM_CheckBranch(benchmark::State& state) {
  check_realization(state, Strategy::branch);
}
BENCHMARK(BM_CheckBranch)
    ->Args({4, 11})
    ->Args({8, 16})
    ->Args({8, 24})
    ->Args({10, 25})
    ->Args({10, 40})
    ->Unit(benchmark::kMillisecond);

// Closed-form evaluation over a dense parameter grid.

void BM_KOneGrid(benchmark::State& state) {
  for (auto _ : state) {
    std::int64_t finite = 0;
    for (std::int64_t m = 1; m <= 100; ++m)
      for (std::int64_t n = 0; n <= 200; ++n)
        finite += k_one(m, n).is_finite();
    benchmark::DoNotOptimize(finite);
  }
  state.SetItemsProcessed(state.iterations() * 100 * 201);
}
BENCHMARK(BM_KOneGrid)->Unit(benchmark::kMillisecond);

void BM_MinN(benchmark::State& state) {
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (std::int64_t m = 1; m <= 1000; ++m) acc += min_n(m).n_m;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_MinN)->Unit(benchmark::kMillisecond);

// Brute-force search at the smallest nontrivial size: all graphs on six
// vertices until the first 2-color realization appears.

void BM_OracleSixVertices(benchmark::State& state) {
  for (auto _ : state) {
    const KValue k = brute_force_k({.a = 1, .m = 1, .n = 6, .k_max = 3});
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_OracleSixVertices)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
