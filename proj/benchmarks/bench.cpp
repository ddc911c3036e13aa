#include <benchmark/benchmark.h>

#include "orderscope/build.hpp"
#include "orderscope/metric_paths.hpp"
#include "orderscope/random_gen.hpp"
#include "orderscope/subdivision.hpp"

using namespace osc;

static void BM_TransitiveClosure(benchmark::State& state) {
  Rng rng(42);
  Preposet p = random_preposet(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(transitive_closure(p));
}
BENCHMARK(BM_TransitiveClosure)->Arg(16)->Arg(64)->Arg(128);

static void BM_Dist(benchmark::State& state) {
  Rng rng(42);
  BasePtr base = make_base(random_poset(rng, static_cast<int>(state.range(0))));
  RPoint x = random_point(rng, base);
  RPoint y = random_point(rng, base);
  for (auto _ : state) benchmark::DoNotOptimize(dist(x, y));
}
BENCHMARK(BM_Dist)->Arg(8)->Arg(32)->Arg(128);

static void BM_ChainFormula(benchmark::State& state) {
  Rng rng(7);
  BasePtr base = make_base(random_poset(rng, static_cast<int>(state.range(0))));
  RPoint x = random_point(rng, base);
  RPoint y = random_point(rng, base);
  for (auto _ : state) benchmark::DoNotOptimize(dist_chain_formula(x, y));
}
BENCHMARK(BM_ChainFormula)->Arg(8)->Arg(32);

static void BM_D3Upper(benchmark::State& state) {
  Rng rng(7);
  BasePtr base = make_base(random_poset(rng, static_cast<int>(state.range(0))));
  RPoint x = random_point(rng, base);
  RPoint y = random_point(rng, base);
  for (auto _ : state) benchmark::DoNotOptimize(d3_upper(x, y));
}
BENCHMARK(BM_D3Upper)->Arg(8)->Arg(32);

static void BM_CanonicalIterate(benchmark::State& state) {
  Poset c2 = chain_poset(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(iterate_canonical(c2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CanonicalIterate)->Arg(2)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
