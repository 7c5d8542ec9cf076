#include "ymheat/partitions.hpp"
#include "ymheat/weights.hpp"
#include "ymheat/yangmills.hpp"

#include <benchmark/benchmark.h>

using namespace ymheat;

namespace {

void BM_Enumerate(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(k));
}
BENCHMARK(BM_Enumerate)->Arg(10)->Arg(20)->Arg(30);

void BM_DimExact(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const CompositeWeight w(Partition{5, 3, 2, 1}, Partition{4, 2, 1}, 0, N);
  for (auto _ : state) benchmark::DoNotOptimize(dim(w));
}
BENCHMARK(BM_DimExact)->Arg(16)->Arg(64)->Arg(256);

void BM_PartitionFunction(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        partition_function(GroupKind::special_unitary, 2, 2.0, N, TruncationPolicy{}));
  }
}
BENCHMARK(BM_PartitionFunction)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_WilsonExpectation(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const GroupKind g = state.range(1) ? GroupKind::unitary : GroupKind::special_unitary;
  const SurfaceSpec s{2, 2.0, 0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(wilson_expectation(g, s, N, TruncationPolicy{}));
  }
}
BENCHMARK(BM_WilsonExpectation)
    ->ArgsProduct({{8, 16, 32, 64}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_SecondMoment(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const SurfaceSpec s{1, 2.0, 0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wilson_second_moment(GroupKind::special_unitary, s, N, TruncationPolicy{}));
  }
}
BENCHMARK(BM_SecondMoment)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_TailBound(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tail_bound(TruncationPolicy{k, 12}, GroupKind::unitary, 1, 2.0, 40));
  }
}
BENCHMARK(BM_TailBound)->Arg(6)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
