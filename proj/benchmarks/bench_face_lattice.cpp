#include <benchmark/benchmark.h>

#include "flagforge/face_lattice.hpp"
#include "flagforge/master.hpp"

using namespace flagforge;

static void BM_EnumerateFacesK2(benchmark::State& state) {
  int half = static_cast<int>(state.range(0));
  std::vector<int> f1, f2;
  for (int e = 1; e <= half + 1; ++e) f1.push_back(e);
  for (int e = half; e <= 2 * half; ++e) f2.push_back(e);
  SetFamily fam({f1, f2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_faces(fam));
  }
}
BENCHMARK(BM_EnumerateFacesK2)->Arg(2)->Arg(3)->Arg(4);

static void BM_EnumerateMaster3(benchmark::State& state) {
  SetFamily fam = master_family(3).family;
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_faces(fam));
  }
}
BENCHMARK(BM_EnumerateMaster3);

static void BM_ChainsMaster3(benchmark::State& state) {
  auto faces = enumerate_faces(master_family(3).family);
  int ell = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_chains(faces, ell));
  }
}
BENCHMARK(BM_ChainsMaster3)->Arg(1)->Arg(2);
