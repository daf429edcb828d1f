// OpenMP kernels against their serial reference versions.
//
//   bench_kernels --benchmark_filter=Enumerate
//
// Thread count follows OMP_NUM_THREADS.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "cutcover/enumerate.hpp"
#include "cutcover/generate.hpp"
#include "cutcover/pipeline.hpp"
#include "cutcover/properties.hpp"
#include "cutcover/reference.hpp"

namespace {

using namespace cutcover;

CapGraph bench_graph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rng() % 2 == 0) edges.push_back(Edge{a, b, Rational(static_cast<long long>(1 + rng() % 10))});
  return CapGraph(n, std::move(edges));
}

// Threshold at the median cut value, so the family is sizeable.
Rational median_lambda(const CapGraph& g) {
  const auto values = cut_values(g);
  return values[values.size() / 2];
}

SetFamily bench_family(std::size_t n) {
  const auto g = bench_graph(n, 42 + n);
  return enumerate_small_cuts(g, median_lambda(g));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto g = bench_graph(static_cast<std::size_t>(state.range(0)), 7);
  const auto lambda = median_lambda(g);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_small_cuts(g, lambda));
}

void BM_EnumerateRational(benchmark::State& state) {
  const auto g = bench_graph(static_cast<std::size_t>(state.range(0)), 7);
  const auto lambda = median_lambda(g);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_small_cuts_rational(g, lambda));
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto g = bench_graph(static_cast<std::size_t>(state.range(0)), 7);
  const auto lambda = median_lambda(g);
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_small_cuts(g, lambda));
}

void BM_PliableParallel(benchmark::State& state) {
  const auto f = bench_family(static_cast<std::size_t>(state.range(0)));
  state.counters["family"] = static_cast<double>(f.size());
  for (auto _ : state) benchmark::DoNotOptimize(check_pliable(f));
}

void BM_PliableSerial(benchmark::State& state) {
  const auto f = bench_family(static_cast<std::size_t>(state.range(0)));
  state.counters["family"] = static_cast<double>(f.size());
  for (auto _ : state) benchmark::DoNotOptimize(reference::check_pliable(f));
}

void BM_SubmodularParallel(benchmark::State& state) {
  const auto f = bench_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_structural_submodularity(f));
}

void BM_SubmodularSerial(benchmark::State& state) {
  const auto f = bench_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::check_structural_submodularity(f));
}

void BM_CoresParallel(benchmark::State& state) {
  const auto f = bench_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cores(f));
}

void BM_CoresSerial(benchmark::State& state) {
  const auto f = bench_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::cores(f));
}

void BM_Batch(benchmark::State& state) {
  RunConfig cfg;
  cfg.seed = 3;
  cfg.count = 64;
  cfg.sample_budget = 10000;
  cfg.threads = static_cast<std::size_t>(state.range(0));
  std::vector<GeneratedInstance> items;
  for (std::size_t i = 0; i < cfg.count; ++i) items.push_back(gen_instance(cfg, i));
  for (auto _ : state) benchmark::DoNotOptimize(run_batch(cfg, items));
}

}  // namespace

BENCHMARK(BM_EnumerateParallel)->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateRational)->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PliableParallel)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PliableSerial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubmodularParallel)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubmodularSerial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoresParallel)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoresSerial)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Batch)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
