#include <benchmark/benchmark.h>

#include "bmat/families.hpp"
#include "bmat/scramble.hpp"

namespace {

// The families with the largest index at each order are the worst case for
// the iteration, so they make a stable yardstick.
void BM_ScramblingIndexWorstCase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bmat::BoolMatrix w = bmat::wielandt(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmat::scrambling_index(w));
  }
}
BENCHMARK(BM_ScramblingIndexWorstCase)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_LocalScramblingIndex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bmat::BoolMatrix w = bmat::wielandt(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmat::local_scrambling_index(w, n - 1, n / 2 - 1));
  }
}
BENCHMARK(BM_LocalScramblingIndex)->Arg(16)->Arg(64);

void BM_MeetMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bmat::BoolMatrix w = bmat::wielandt(n);
  const int k = static_cast<int>(((n - 1) * (n - 1) + 2) / 2) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmat::meet_matrix(w, k));
  }
}
BENCHMARK(BM_MeetMatrix)->Arg(16)->Arg(64);

}  // namespace
