#include <benchmark/benchmark.h>

#include "kemeny/cycles.hpp"
#include "kemeny/datagen.hpp"
#include "kemeny/distance.hpp"
#include "kemeny/matrices.hpp"

using namespace kemeny;

namespace {

Dataset dataset_of(int n) {
  GenSpec spec;
  spec.n = n;
  spec.votes = 11;
  spec.seed = 7;
  return gen_synthetic(spec);
}

void BM_BuildComparison(benchmark::State& state) {
  const Dataset ds = dataset_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_comparison(ds));
  }
}
BENCHMARK(BM_BuildComparison)->Arg(10)->Arg(30)->Arg(50);

void BM_CumulativeKt(benchmark::State& state) {
  const Dataset ds = dataset_of(static_cast<int>(state.range(0)));
  const Ranking r = ds.votes.front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cumulative_kt(ds, r));
  }
}
BENCHMARK(BM_CumulativeKt)->Arg(10)->Arg(30)->Arg(50);

void BM_DetectCycles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Dataset ds = dataset_of(n);
  const OmegaMatrix om = omega(bias_of(build_comparison(ds)));
  UpperTriBits x(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      x.set(i, j, om.at(i, j) >= 0.5 ? 1 : 0);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(detect_cycles(x));
  }
}
BENCHMARK(BM_DetectCycles)->Arg(10)->Arg(30)->Arg(50);

void BM_InitialCycles(benchmark::State& state) {
  const Dataset ds = dataset_of(static_cast<int>(state.range(0)));
  const OmegaMatrix om = omega(bias_of(build_comparison(ds)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(initial_cycles(om, Parity::odd));
  }
}
BENCHMARK(BM_InitialCycles)->Arg(10)->Arg(30)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
