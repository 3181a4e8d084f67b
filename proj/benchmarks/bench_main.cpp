#include <benchmark/benchmark.h>

#include "iwk/cyclo_eval.hpp"
#include "iwk/kobayashi_rank.hpp"
#include "iwk/lambda_ring.hpp"
#include "iwk/sampling.hpp"
#include "iwk/zp_modules.hpp"

namespace {

void BM_SnfLocal(benchmark::State& state) {
  const iwk::PrimeContext ctx(3);
  iwk::Sampler s(7);
  const auto dim = static_cast<std::size_t>(state.range(0));
  iwk::IntMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = static_cast<long>(s.uniform(-50, 50));
  }
  for (auto _ : state) benchmark::DoNotOptimize(iwk::snf_local(ctx, g));
}
BENCHMARK(BM_SnfLocal)->Arg(18)->Arg(54);

void BM_OrdEps(benchmark::State& state) {
  const iwk::PrimeContext ctx(3);
  iwk::Sampler s(11);
  const iwk::LambdaElement f = s.poly(8, 20) + iwk::LambdaElement::constant(1);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iwk::ord_eps(ctx, m, f));
}
BENCHMARK(BM_OrdEps)->Arg(1)->Arg(2)->Arg(3);

void BM_NablaMatrixTower(benchmark::State& state) {
  const iwk::PrimeContext ctx(3);
  iwk::Sampler s(13);
  const int n = static_cast<int>(state.range(0));
  const iwk::LambdaMatrix a = s.special_matrix(ctx, n);
  for (auto _ : state) benchmark::DoNotOptimize(iwk::nabla_matrix_tower(ctx, a, n));
}
BENCHMARK(BM_NablaMatrixTower)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
