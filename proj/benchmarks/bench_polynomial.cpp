#include <benchmark/benchmark.h>

#include "diophant/enumeration.hpp"
#include "diophant/reduction.hpp"
#include "diophant/syntax.hpp"

namespace {

using namespace diophant;

void BM_EvaluateQuadratic(benchmark::State& state) {
  const auto p = parse_polynomial("x0^3 - 2*x1^2*x2 + 5*x0*x1 - 7", RingDescriptor::quadratic(2));
  const Assignment at{RingElement(p.ring(), 3, 1), RingElement(p.ring(), -2, 4), RingElement(p.ring(), 1, -1)};
  for (auto _ : state) benchmark::DoNotOptimize(p.evaluate(at));
}
BENCHMARK(BM_EvaluateQuadratic);

void BM_MultiplyPolynomials(benchmark::State& state) {
  const auto ring = RingDescriptor::integers();
  const auto p = parse_polynomial("(x0 + x1 + x2 + 1)^" + std::to_string(state.range(0)), ring);
  for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_MultiplyPolynomials)->Arg(2)->Arg(4)->Arg(6);

void BM_NthPolynomial(benchmark::State& state) {
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nth_polynomial(n));
    n = n % 5000 + 1;
  }
}
BENCHMARK(BM_NthPolynomial);

void BM_NatDefinitionEvaluate(benchmark::State& state) {
  const auto q = nat_definition(2);
  const auto w = nat_definition_witness(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(q.evaluate(w));
}
BENCHMARK(BM_NatDefinitionEvaluate);

}  // namespace
