#include <benchmark/benchmark.h>

#include "sylow/classifier.hpp"
#include "sylow/oracle.hpp"
#include "sylow/valuation.hpp"

namespace {

using namespace sylow;

void BM_Enumerate(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  const auto n = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    auto g = oracle::enumerate_group(m, 1, n);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_Enumerate)->Args({2, 4})->Args({4, 3})->Args({12, 3});

void BM_ReflectionClasses(benchmark::State& state) {
  auto g = oracle::enumerate_group(12, 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::reflection_subgroup_classes(g));
}
BENCHMARK(BM_ReflectionClasses)->Unit(benchmark::kMillisecond);

void BM_ParabolicClasses(benchmark::State& state) {
  auto g = oracle::enumerate_group(2, 1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::parabolic_classes(g));
}
BENCHMARK(BM_ParabolicClasses)->Unit(benchmark::kMillisecond);

void BM_ClassifyCatalog(benchmark::State& state) {
  auto catalog = irreducible_catalog();
  for (auto _ : state) {
    for (const auto& g : catalog)
      for (auto ell : prime_divisors(g.order()))
        benchmark::DoNotOptimize(classify_reflection(g, ell));
  }
}
BENCHMARK(BM_ClassifyCatalog)->Unit(benchmark::kMillisecond);

void BM_MinimalPartition(benchmark::State& state) {
  for (auto _ : state)
    for (std::uint64_t n = 1; n <= 1000; ++n)
      benchmark::DoNotOptimize(valuation::minimal_factorial_partition(3, n));
}
BENCHMARK(BM_MinimalPartition);

}  // namespace

BENCHMARK_MAIN();
