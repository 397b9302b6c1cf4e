#include <benchmark/benchmark.h>

#include "knfam/central_extensions.hpp"
#include "knfam/function_algebras.hpp"

using namespace knfam;

namespace {

void bm_gamma_residue(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GammaValue g = gamma_residue_oracle(n, -n + 2, 2 * n + 8);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(bm_gamma_residue)->Arg(5)->Arg(9);

void bm_gamma_recursion(benchmark::State &state) {
  const FamilySpec ell = FamilySpec::elliptic();
  const int window = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GammaTable t = gamma_recursion(ell.c2(), ell.c4(), window);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(bm_gamma_recursion)->Arg(6)->Arg(10);

void bm_associativity(benchmark::State &state) {
  const FamilySpec ell = FamilySpec::elliptic();
  const int window = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Report rep = verify_associativity(ell, window);
    benchmark::DoNotOptimize(rep.pass);
  }
}
BENCHMARK(bm_associativity)->Arg(4)->Arg(6);

} // namespace
