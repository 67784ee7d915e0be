// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "rlat/enumerate.hpp"
#include "rlat/harness.hpp"

namespace {

void threads(benchmark::State& state) { omp_set_num_threads(static_cast<int>(state.range(1))); }

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rlat::enumerate_algebras_serial(state.range(0)));
}

void BM_EnumerateParallel(benchmark::State& state) {
  threads(state);
  for (auto _ : state) benchmark::DoNotOptimize(rlat::enumerate_algebras(state.range(0)));
}

void BM_VerifySerial(benchmark::State& state) {
  const auto corpus = rlat::make_corpus(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rlat::verify_corpus(corpus, {}, false));
}

void BM_VerifyParallel(benchmark::State& state) {
  threads(state);
  const auto corpus = rlat::make_corpus(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rlat::verify_corpus(corpus, {}, true));
}

void BM_SearchSerial(benchmark::State& state) {
  const auto corpus = rlat::make_corpus(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rlat::search_open_problems(corpus.algebras, false));
}

void BM_SearchParallel(benchmark::State& state) {
  threads(state);
  const auto corpus = rlat::make_corpus(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rlat::search_open_problems(corpus.algebras, true));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->ArgsProduct({{5, 6}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifySerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->ArgsProduct({{5, 6}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchSerial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->ArgsProduct({{6}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
