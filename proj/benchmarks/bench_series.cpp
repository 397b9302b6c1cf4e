#include <benchmark/benchmark.h>

#include "knfam/weierstrass_series.hpp"

using namespace knfam;

namespace {

void bm_wp_series(benchmark::State &state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LaurentSeries wp = wp_series(order);
    benchmark::DoNotOptimize(wp);
  }
}
BENCHMARK(bm_wp_series)->Arg(12)->Arg(24)->Arg(36);

void bm_basis_series(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LaurentSeries f = basis_series(n, 24);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(bm_basis_series)->Arg(5)->Arg(-7)->Arg(11);

void bm_series_mul(benchmark::State &state) {
  const LaurentSeries f = basis_series(5, static_cast<int>(state.range(0)));
  const LaurentSeries g = basis_series(-3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    LaurentSeries h = f * g;
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(bm_series_mul)->Arg(16)->Arg(28);

void bm_series_invert(benchmark::State &state) {
  const LaurentSeries f = basis_series(4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    LaurentSeries h = series_invert(f);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(bm_series_invert)->Arg(16)->Arg(28);

} // namespace
