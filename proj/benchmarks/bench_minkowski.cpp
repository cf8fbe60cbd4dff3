#include <benchmark/benchmark.h>

#include "flagforge/extremal.hpp"

using namespace flagforge;

static void BM_FlagMinkowskiK2(benchmark::State& state) {
  SetFamily fam = family_from_profile({3, 2, 2});
  int ell = static_cast<int>(state.range(0));
  master_chains(2, ell);  // memoized; charge only the evaluation
  for (auto _ : state) {
    benchmark::DoNotOptimize(flag_minkowski(fam, ell));
  }
}
BENCHMARK(BM_FlagMinkowskiK2)->Arg(2)->Arg(3);

static void BM_FlagMinkowskiK3(benchmark::State& state) {
  SetFamily fam({{1, 2, 3, 4}, {1, 2, 5}, {2, 3, 6}});
  int ell = static_cast<int>(state.range(0));
  master_chains(3, ell);
  for (auto _ : state) {
    benchmark::DoNotOptimize(flag_minkowski(fam, ell));
  }
}
BENCHMARK(BM_FlagMinkowskiK3)->Arg(1)->Arg(2);

static void BM_Flag2ClosedK2(benchmark::State& state) {
  K2Profile p{4, 3, 3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(flag2_closed_k2(p));
  }
}
BENCHMARK(BM_Flag2ClosedK2);

static void BM_MaxDiscrepancy(benchmark::State& state) {
  int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_discrepancy(r, 2));
  }
}
BENCHMARK(BM_MaxDiscrepancy)->Arg(60)->Arg(500)->Arg(2000);
