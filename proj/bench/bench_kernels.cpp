#include <benchmark/benchmark.h>

#include "rectangulotope/congruence.hpp"
#include "rectangulotope/polytope.hpp"
#include "rectangulotope/verify.hpp"

using namespace rectangulotope;

namespace {

void BM_EnumerateParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(n, ArcIdealKind::weak));
}

void BM_EnumerateSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::enumerate_classes(n, ArcIdealKind::weak));
}

void BM_VerifyParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<Check> checks{Check::three_way, Check::minkowski_consistency};
  for (auto _ : state) benchmark::DoNotOptimize(verify_realization(n, FacetKind::strong, checks));
}

void BM_VerifySerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<Check> checks{Check::three_way, Check::minkowski_consistency};
  for (auto _ : state) benchmark::DoNotOptimize(serial::verify_realization(n, FacetKind::strong, checks));
}

void BM_StrongVertices(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto classes = enumerate_classes(n, ArcIdealKind::strong);
  for (auto _ : state) benchmark::DoNotOptimize(class_vertices(FacetKind::strong, classes));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(classes.size()));
}

}  // namespace

BENCHMARK(BM_EnumerateParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StrongVertices)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
