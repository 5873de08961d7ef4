#include <benchmark/benchmark.h>

// The prebuilt benchmark_main archive ships LTO bytecode from a different
// compiler release, so define the entry point here instead.
BENCHMARK_MAIN();
