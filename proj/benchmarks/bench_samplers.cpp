#include <benchmark/benchmark.h>

#include "kemeny/datagen.hpp"
#include "kemeny/encode.hpp"
#include "kemeny/samplers.hpp"

using namespace kemeny;

namespace {

Qubo base_qubo(int n) {
  GenSpec spec;
  spec.n = n;
  spec.votes = 11;
  spec.seed = 7;
  const BiasMatrix b = bias_of(build_comparison(gen_synthetic(spec)));
  return build_base_qubo(b, select_penalty(b, 11.0, Parity::odd, 0.5));
}

void BM_ExactSolve(benchmark::State& state) {
  const Qubo q = base_qubo(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_solve(q));
  }
  state.SetLabel(std::to_string(q.num_vars) + " vars");
}
BENCHMARK(BM_ExactSolve)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SaSolve(benchmark::State& state) {
  const Qubo q = base_qubo(static_cast<int>(state.range(0)));
  SaParams p;
  p.reads = 2500;
  p.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sa_solve(q, p));
  }
  state.SetLabel(std::to_string(q.num_vars) + " vars");
}
BENCHMARK(BM_SaSolve)->Arg(7)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

}  // namespace
