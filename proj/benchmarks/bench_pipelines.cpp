#include <benchmark/benchmark.h>

#include "kemeny/baselines.hpp"
#include "kemeny/datagen.hpp"
#include "kemeny/solve.hpp"

using namespace kemeny;

namespace {

Dataset dataset_of(int n) {
  GenSpec spec;
  spec.n = n;
  spec.votes = 11;
  spec.seed = 7;
  return gen_synthetic(spec);
}

void BM_SolveIterativeExact(benchmark::State& state) {
  const Dataset ds = dataset_of(static_cast<int>(state.range(0)));
  ExactSampler exact;
  IterOptions opts;
  opts.seed = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_iterative(ds, exact, opts));
  }
}
BENCHMARK(BM_SolveIterativeExact)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SolveIterativeSa(benchmark::State& state) {
  const Dataset ds = dataset_of(static_cast<int>(state.range(0)));
  SaParams p;
  p.reads = 1000;
  SaSampler sa(p);
  IterOptions opts;
  opts.seed = 3;
  opts.max_cycle_updates = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_iterative(ds, sa, opts));
  }
}
BENCHMARK(BM_SolveIterativeSa)->Arg(10)->Arg(15)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_KwikSort(benchmark::State& state) {
  const PairMatrix pm = build_comparison(dataset_of(static_cast<int>(state.range(0))));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kwiksort(pm, seed++));
  }
}
BENCHMARK(BM_KwikSort)->Arg(10)->Arg(30)->Arg(50);

void BM_BruteForce(benchmark::State& state) {
  const Dataset ds = dataset_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force(ds));
  }
}
BENCHMARK(BM_BruteForce)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
