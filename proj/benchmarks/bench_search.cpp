#include <benchmark/benchmark.h>

#include "diophant/search.hpp"
#include "diophant/syntax.hpp"

namespace {

using namespace diophant;

// 100003 = 3 mod 8 needs a square >= 25000, so small boxes are scanned in full.
void BM_BoxScanNaturals(benchmark::State& state) {
  const auto q = parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2 - 100003", RingDescriptor::integers());
  const auto radius = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_bounded(q, SearchDomain::naturals(radius), 4));
}
BENCHMARK(BM_BoxScanNaturals)->Arg(10)->Arg(20);

void BM_BoxScanGaussian(benchmark::State& state) {
  const auto ring = RingDescriptor::gaussian();
  const auto q = parse_polynomial("x0^2 - 4*x0*x1 + x1^2 - 7", ring);
  for (auto _ : state) benchmark::DoNotOptimize(solve_bounded(q, SearchDomain::ring_box(ring, 6), 2));
}
BENCHMARK(BM_BoxScanGaussian);

void BM_BoxScanThreads(benchmark::State& state) {
  const auto q = parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2 - 100003", RingDescriptor::integers());
  SearchOptions opts;
  opts.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_bounded(q, SearchDomain::naturals(20), 4, {}, opts));
}
BENCHMARK(BM_BoxScanThreads)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace
