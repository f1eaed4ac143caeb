#include <benchmark/benchmark.h>

#include "jcouple/coupling.hpp"
#include "jcouple/timerev.hpp"
#include "jcouple/wigner.hpp"

using namespace jcouple;

namespace {

void all_cg(HalfInt max) {
  for (HalfInt j1 = 0; j1 <= max; j1 += HalfInt(1, 2)) {
    for (HalfInt j2 = 0; j2 <= max; j2 += HalfInt(1, 2)) {
      for (const HalfInt j : allowed_j(j1, j2)) {
        for (HalfInt m1 = -j1; m1 <= j1; m1 += 1) {
          for (HalfInt m2 = -j2; m2 <= j2; m2 += 1) {
            const HalfInt m = m1 + m2;
            if (abs(m) <= j) benchmark::DoNotOptimize(cg({j1, m1, j2, m2, j, m}));
          }
        }
      }
    }
  }
}

void BM_CgGridCached(benchmark::State& state) {
  const HalfInt max = HalfInt::from_twice(state.range(0));
  all_cg(max);
  for (auto _ : state) all_cg(max);
}
BENCHMARK(BM_CgGridCached)->Arg(3)->Arg(6)->Arg(10);

// Twice-spins of 512 and above fall outside the memo, so this times the Racah sum itself.
void BM_CgUncachedLargeSpin(benchmark::State& state) {
  const HalfInt j1 = HalfInt::from_twice(state.range(0));
  const HalfInt j = HalfInt::from_twice(2 * state.range(0) - 4);
  for (auto _ : state) benchmark::DoNotOptimize(cg({j1, HalfInt(0), j1, HalfInt(0), j, HalfInt(0)}));
}
BENCHMARK(BM_CgUncachedLargeSpin)->Arg(600)->Arg(1200);

void BM_TreeEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_coupling_tree(n, [&](const CouplingTree&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_TreeEnumeration)->DenseRange(4, 8, 2);

void BM_KramersOverlap(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::vector<HalfInt> js(n, HalfInt(3, 2));
  const auto chains = enumerate_chains(js);
  for (auto _ : state) {
    for (const auto& chain : chains) {
      if (chain.total_j().is_half_odd()) benchmark::DoNotOptimize(kramers_overlap(chain, HalfInt(1, 2)));
    }
  }
}
BENCHMARK(BM_KramersOverlap)->Arg(3)->Arg(5);

}  // namespace
BENCHMARK_MAIN();
