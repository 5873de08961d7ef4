#include <benchmark/benchmark.h>

#include <random>

#include "bmat/boolrank.hpp"
#include "bmat/families.hpp"

namespace {

bmat::BoolMatrix random_matrix(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(density);
  bmat::BoolMatrix m = bmat::BoolMatrix::zeros(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (bit(rng)) m.set(i, j, true);
  return m;
}

void BM_MaximalRectangles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bmat::BoolMatrix m = random_matrix(n, 0.5, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmat::maximal_rectangles(m));
  }
}
BENCHMARK(BM_MaximalRectangles)->Arg(8)->Arg(12)->Arg(16);

void BM_BooleanRankRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bmat::BoolMatrix m = random_matrix(n, 0.5, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmat::boolean_rank(m));
  }
}
BENCHMARK(BM_BooleanRankRandom)->Arg(6)->Arg(8)->Arg(10);

void BM_BooleanRankStructured(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  std::vector<int> sizes(static_cast<std::size_t>(b + 1), 2);
  const bmat::BoolMatrix m = bmat::table1(bmat::FamilyKind::m1, b, sizes);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmat::boolean_rank(m));
  }
}
BENCHMARK(BM_BooleanRankStructured)->Arg(4)->Arg(6)->Arg(8);

}  // namespace
