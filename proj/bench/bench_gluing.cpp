// Strip gluing: serial brute-force reference against the parallel transfer-matrix kernel.

#include <benchmark/benchmark.h>

#include <string>

#include "tvs/vertex.hpp"

namespace {

const char* const kWords[] = {"AB", "ABA", "ABBA", "ABABAB"};

void BM_GlueReference(benchmark::State& state) {
  const tvs::StripGeometry strip(kWords[state.range(0)]);
  const int cap = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tvs::glue_strip_reference(tvs::SymbolicQ{}, strip, cap));
  state.SetLabel(strip.word());
}

void BM_GlueKernel(benchmark::State& state) {
  const tvs::StripGeometry strip(kWords[state.range(0)]);
  const int cap = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tvs::glue_strip(tvs::SymbolicQ{}, strip, cap));
  state.SetLabel(strip.word());
}

void BM_GlueReferenceNumeric(benchmark::State& state) {
  const tvs::StripGeometry strip(kWords[state.range(0)]);
  const int cap = static_cast<int>(state.range(1));
  const auto field = tvs::NumericQ::from_q(tvs::frac(9, 4));
  for (auto _ : state) benchmark::DoNotOptimize(tvs::glue_strip_reference(field, strip, cap));
  state.SetLabel(strip.word());
}

void BM_GlueKernelNumeric(benchmark::State& state) {
  const tvs::StripGeometry strip(kWords[state.range(0)]);
  const int cap = static_cast<int>(state.range(1));
  const auto field = tvs::NumericQ::from_q(tvs::frac(9, 4));
  for (auto _ : state) benchmark::DoNotOptimize(tvs::glue_strip(field, strip, cap));
  state.SetLabel(strip.word());
}

void args(benchmark::internal::Benchmark* b) {
  for (int w = 0; w < 4; ++w)
    for (int cap = 2; cap <= 4; ++cap) b->Args({w, cap});
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_GlueReference)->Apply(args);
BENCHMARK(BM_GlueKernel)->Apply(args);
BENCHMARK(BM_GlueReferenceNumeric)->Apply(args);
BENCHMARK(BM_GlueKernelNumeric)->Apply(args);

BENCHMARK_MAIN();
