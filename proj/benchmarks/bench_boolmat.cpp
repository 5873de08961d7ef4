#include <benchmark/benchmark.h>

#include <random>

#include "bmat/boolmat.hpp"

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

void BM_Multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bmat::BoolMatrix a = random_matrix(n, 0.1, 1);
  const bmat::BoolMatrix b = random_matrix(n, 0.1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmat::multiply(a, b));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Multiply)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_Transpose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bmat::BoolMatrix a = random_matrix(n, 0.3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmat::transpose(a));
  }
}
BENCHMARK(BM_Transpose)->Arg(256)->Arg(1024);

void BM_Power(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bmat::BoolMatrix a = random_matrix(n, 0.05, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmat::power(a, 1000));
  }
}
BENCHMARK(BM_Power)->Arg(64)->Arg(256);

}  // namespace
