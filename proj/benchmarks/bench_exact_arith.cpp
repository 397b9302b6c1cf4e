#include <benchmark/benchmark.h>

#include "knfam/exact_arith.hpp"

using namespace knfam;

namespace {

/* dense-ish polynomial in e1, e2 of total degree d with rational coeffs */
MultiPoly make_poly(int d) {
  MultiPoly p;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j + i <= d; ++j)
      p += MultiPoly(Rational(i - j, 1 + i + 2 * j)) *
           MultiPoly::var(ParamId::e1, i) * MultiPoly::var(ParamId::e2, j);
  return p;
}

void bm_poly_mul(benchmark::State &state) {
  const MultiPoly f = make_poly(static_cast<int>(state.range(0)));
  const MultiPoly g = make_poly(static_cast<int>(state.range(0)) + 1);
  for (auto _ : state) {
    MultiPoly h = f * g;
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(bm_poly_mul)->Arg(4)->Arg(8)->Arg(12);

void bm_poly_pow(benchmark::State &state) {
  const MultiPoly f = make_poly(3);
  for (auto _ : state) {
    MultiPoly h = poly_pow(f, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(bm_poly_pow)->Arg(4)->Arg(8);

void bm_poly_substitute(benchmark::State &state) {
  const MultiPoly f = make_poly(static_cast<int>(state.range(0)));
  SubstMap map;
  map[ParamId::e1] = MultiPoly::var(ParamId::t, 2);
  map[ParamId::e2] = MultiPoly::var(ParamId::s, 1) * MultiPoly::var(ParamId::t, 2);
  for (auto _ : state) {
    MultiPoly h = poly_substitute(f, map);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(bm_poly_substitute)->Arg(6)->Arg(10);

} // namespace
