#include <benchmark/benchmark.h>

#include "bmat/harness.hpp"

namespace {

void BM_ExhaustiveOrder3(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmat::exhaustive_verify(3));
  }
}
BENCHMARK(BM_ExhaustiveOrder3)->Unit(benchmark::kMillisecond);

void BM_RandomPairs(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmat::random_pair_campaign(100, {2, 6}, {2, 6}, 42));
  }
}
BENCHMARK(BM_RandomPairs)->Unit(benchmark::kMillisecond);

void BM_FamilyRoundtrip(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmat::family_roundtrip_campaign(20, 7));
  }
}
BENCHMARK(BM_FamilyRoundtrip)->Unit(benchmark::kMillisecond);

}  // namespace
