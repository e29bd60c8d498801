#include <benchmark/benchmark.h>
static void B(benchmark::State& s){for(auto _ : s){}}
BENCHMARK(B);
