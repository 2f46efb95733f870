#include <benchmark/benchmark.h>

#include "fmlog/campaigns.hpp"
#include "fmlog/log_calculus.hpp"
#include "fmlog/nested.hpp"
#include "fmlog/screens.hpp"

using namespace fmlog;

static void BM_FmCompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const Surjection q = random_surjection(rng, n, 2);
  const FMPoint x = random_point(rng, 2, 2);
  const std::vector<FMPoint> ys{random_point(rng, 2, q.fiber_size(1)), random_point(rng, 2, q.fiber_size(2))};
  for (auto _ : state) benchmark::DoNotOptimize(compose(q, x, ys));
}
BENCHMARK(BM_FmCompose)->DenseRange(3, 7, 2);

static void BM_FmCoordinates(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const FMPoint x = random_point(rng, 3, n);
  const auto subsets = multi_subsets(n);
  for (auto _ : state)
    for (Mask m : subsets) benchmark::DoNotOptimize(coordinates(x, m));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(subsets.size()));
}
BENCHMARK(BM_FmCoordinates)->DenseRange(3, 7, 2);

static void BM_PointEq(benchmark::State& state) {
  Rng rng(3);
  const FMPoint x = random_point(rng, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(point_eq(x, x));
}
BENCHMARK(BM_PointEq)->Arg(4)->Arg(6);

static void BM_GammaSweep(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto qs = all_surjections(m);
  for (auto _ : state)
    for (const auto& q : qs) benchmark::DoNotOptimize(gamma_vlog(q));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(qs.size()));
}
BENCHMARK(BM_GammaSweep)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_stable_trees(n));
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_ScreenRoundTrip(benchmark::State& state) {
  Rng rng(4);
  const Surjection q({1, 1, 2, 2}, 2);
  const SimpleScreen s = screen_compose(q, random_screen(rng, 2, 2),
                                        {random_screen(rng, 2, 2), random_screen(rng, 2, 2)});
  for (auto _ : state) {
    const auto dec = screen_decompose(q, s);
    benchmark::DoNotOptimize(screen_compose(q, dec.outer, dec.inner));
  }
}
BENCHMARK(BM_ScreenRoundTrip);
BENCHMARK_MAIN();
