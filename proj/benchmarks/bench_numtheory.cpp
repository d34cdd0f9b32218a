#include <benchmark/benchmark.h>

#include "diophant/numtheory.hpp"
#include "diophant/reduction.hpp"

namespace {

using namespace diophant;

void BM_PellSequence(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pell_sequence(3, n));
}
BENCHMARK(BM_PellSequence)->Arg(10)->Arg(100)->Arg(1000);

void BM_FourSquares(benchmark::State& state) {
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(four_squares(n));
    n = n % 10000 + 1;
  }
}
BENCHMARK(BM_FourSquares);

void BM_PellFundamental(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pell_fundamental(state.range(0)));
}
BENCHMARK(BM_PellFundamental)->Arg(2)->Arg(61)->Arg(991);

void BM_GaussWitness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gauss_witness(state.range(0)));
}
BENCHMARK(BM_GaussWitness)->Arg(0)->Arg(5);

void BM_SigmaWitness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sigma_witness(2, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_SigmaWitness)->Arg(1)->Arg(5);

}  // namespace
