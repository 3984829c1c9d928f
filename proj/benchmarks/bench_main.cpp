#include <benchmark/benchmark.h>

#include "kmforms/jacobi.hpp"
#include "kmforms/superalgebra.hpp"
#include "kmforms/theta.hpp"

namespace {

using namespace kmforms;

void BM_SeriesMul(benchmark::State& state) {
  const auto bound = state.range(0);
  const SeriesLayout l = SeriesLayout::make(3, std::array<std::int64_t, 3>{1, 1, 1},
                                            std::array<std::int64_t, 3>{2, -1, 2}, bound);
  std::vector<ProductFactor> f;
  for (std::int64_t n = 0; 2 * n <= bound; ++n)
    for (std::int64_t m = 1; 2 * n + 2 * m <= bound; ++m) f.push_back({Exponent{n, 0, m}, 3});
  const GradedSeries a = product_expand(l, f);
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(a, a));
  state.counters["terms"] = static_cast<double>(a.size());
}
BENCHMARK(BM_SeriesMul)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Delta5Trace(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(delta5(state.range(0)));
}
BENCHMARK(BM_Delta5Trace)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_Delta5Lambda(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(delta5(Truncation{TruncationKind::kLambda, state.range(0)}));
}
BENCHMARK(BM_Delta5Lambda)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_ProductExtraction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(denominator_identity_verify(1, state.range(0)));
}
BENCHMARK(BM_ProductExtraction)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_WeakJacobi(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weak_jacobi(WeakJacobiKind::kPhi0_1, state.range(0)));
}
BENCHMARK(BM_WeakJacobi)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
