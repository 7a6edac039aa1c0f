#include <benchmark/benchmark.h>

#include "fusioncat/catalog.hpp"
#include "fusioncat/duality.hpp"
#include "fusioncat/spectral.hpp"
#include "fusioncat/validate.hpp"

namespace {

void BM_PentagonIsing(benchmark::State& state) {
  fcat::SkeletalCategory cat = fcat::catalog_category("Ising");
  for (auto _ : state) benchmark::DoNotOptimize(fcat::pentagon_residual(cat));
}
BENCHMARK(BM_PentagonIsing);

void BM_TensorWordFibonacci(benchmark::State& state) {
  fcat::SkeletalCategory cat = fcat::catalog_category("Fibonacci");
  const fcat::ObjectExpr tau = cat.simple(cat.id("tau"));
  for (auto _ : state) {
    fcat::WordOp w(cat, {tau, tau, tau, tau});
    benchmark::DoNotOptimize(w.morphism());
  }
}
BENCHMARK(BM_TensorWordFibonacci);

void BM_TLNorm(benchmark::State& state) {
  auto backend = fcat::make_tl_backend(3.0);
  const fcat::RingObject x{{"1", 1}};
  for (auto _ : state) {
    auto rep = fcat::fusion_matrix_norm(*backend, x, {state.range(0)});
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_TLNorm)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
