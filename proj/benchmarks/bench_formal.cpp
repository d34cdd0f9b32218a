#include <benchmark/benchmark.h>

#include "diophant/formal.hpp"

namespace {

using namespace diophant;

void BM_LiarExhaustive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(liar_exhaustive(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_LiarExhaustive)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DiagonalExhaustive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_exhaustive(3, 3));
}
BENCHMARK(BM_DiagonalExhaustive)->Unit(benchmark::kMillisecond);

void BM_Quine(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(quine_sentence("yields falsehood when appended to its own quotation: ⟨hole⟩"));
  }
}
BENCHMARK(BM_Quine);

}  // namespace
