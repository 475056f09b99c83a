// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "leapfrog/equilibrium.hpp"
#include "leapfrog/search.hpp"

using namespace leapfrog;

namespace {

void BM_FalsifySerial(benchmark::State& state) {
  GenConfig cfg;
  cfg.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(falsify_serial(Conjecture::kThm1, cfg, state.range(0)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FalsifyParallel(benchmark::State& state) {
  GenConfig cfg;
  cfg.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(falsify(Conjecture::kThm1, cfg, state.range(0)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

Instance large_instance(int m) {
  GenConfig cfg;
  cfg.m_range = {m, m};
  cfg.n_range = {2 * m, 2 * m};
  cfg.seed = 2;
  return gen_instance(cfg, 0);
}

void BM_EnumerateReference(benchmark::State& state) {
  const Instance inst = large_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_equilibria_reference(inst));
}

void BM_EnumerateGrid(benchmark::State& state) {
  const Instance inst = large_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_equilibria(inst));
}

}  // namespace

BENCHMARK(BM_FalsifySerial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FalsifyParallel)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateReference)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateGrid)->Arg(16)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
