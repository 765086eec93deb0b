#include <benchmark/benchmark.h>

#include "tropmat/catalog.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/multivector.hpp"
#include "tropmat/transversal.hpp"
#include "tropmat/tropical_space.hpp"

namespace {

void BM_rank_table(benchmark::State& state) {
  const tropmat::Matroid m = tropmat::uniform_matroid(4, 8);
  for (auto _ : state) benchmark::DoNotOptimize(tropmat::rank_table(m));
}
BENCHMARK(BM_rank_table);

void BM_enumerate_n5(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(tropmat::enumerate_matroids(5));
}
BENCHMARK(BM_enumerate_n5);

void BM_bend_congruence(benchmark::State& state) {
  const tropmat::Matroid m = tropmat::uniform_matroid(3, 6);
  const auto cs = tropmat::circuits(m);
  for (auto _ : state)
    benchmark::DoNotOptimize(tropmat::bend_congruence(m.n(), cs));
}
BENCHMARK(BM_bend_congruence);

void BM_stable_sum(benchmark::State& state) {
  const tropmat::Matroid a = tropmat::uniform_matroid(2, 6);
  const tropmat::Matroid b = tropmat::uniform_matroid(1, 6);
  for (auto _ : state) benchmark::DoNotOptimize(tropmat::stable_sum(a, b));
}
BENCHMARK(BM_stable_sum);

void BM_stiefel_fiber_2x4(benchmark::State& state) {
  const tropmat::Multivector v =
      tropmat::indicator(tropmat::uniform_matroid(2, 4));
  for (auto _ : state)
    benchmark::DoNotOptimize(tropmat::stiefel_fiber(v, 2, 4));
}
BENCHMARK(BM_stiefel_fiber_2x4);

void BM_transversal_witness(benchmark::State& state) {
  const tropmat::Matroid m = tropmat::uniform_matroid(3, 6);
  for (auto _ : state)
    benchmark::DoNotOptimize(tropmat::transversal_witness(m));
}
BENCHMARK(BM_transversal_witness);

}  // namespace

BENCHMARK_MAIN();
