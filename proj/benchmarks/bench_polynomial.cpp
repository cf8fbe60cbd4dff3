#include <benchmark/benchmark.h>

#include "flagforge/simplex_flag.hpp"

using namespace flagforge;

static void BM_FlagSimplexExpand(benchmark::State& state) {
  int r = static_cast<int>(state.range(0));
  int ell = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(flag_simplex(r, {ell, 1}));
  }
}
BENCHMARK(BM_FlagSimplexExpand)->Args({8, 2})->Args({8, 3})->Args({20, 3});

static void BM_PolynomialSquare(benchmark::State& state) {
  Polynomial p = flag_simplex(static_cast<int>(state.range(0)), {3, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(p * p);
  }
}
BENCHMARK(BM_PolynomialSquare)->Arg(6)->Arg(12);

static void BM_PhiTransform(benchmark::State& state) {
  Polynomial p = flag_simplex(12, {3, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_transform(p));
  }
}
BENCHMARK(BM_PhiTransform);
