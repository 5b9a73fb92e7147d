#include <benchmark/benchmark.h>

#include "commtrace/maps.hpp"
#include "commtrace/rings.hpp"
#include "commtrace/traceinv.hpp"
#include "commtrace/verify.hpp"

namespace {

using namespace commtrace;

void BM_PolyMultiply(benchmark::State& state) {
  PolyGenerator gen(1);
  const auto a = gen.abstract_poly(3, static_cast<int>(state.range(0)), 12);
  const auto b = gen.abstract_poly(3, static_cast<int>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(2)->Arg(4)->Arg(6);

void BM_FundamentalIdentity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_fundamental(n));
}
BENCHMARK(BM_FundamentalIdentity)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_ExpressInTBasis(benchmark::State& state) {
  const RingConfig cfg(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto p = eval_diagonal(t_lambda(enumerate_set_partitions(cfg.m(), cfg.m()).back()), cfg);
  for (auto _ : state) benchmark::DoNotOptimize(express_in_t_basis(p, cfg));
}
BENCHMARK(BM_ExpressInTBasis)->Args({2, 3})->Args({3, 4})->Args({4, 5})->Unit(benchmark::kMicrosecond);

void BM_DMap(benchmark::State& state) {
  const RingConfig cfg(static_cast<int>(state.range(0)), 3);
  PolyGenerator gen(9);
  const auto a = gen.abstract_poly(3);
  for (auto _ : state) benchmark::DoNotOptimize(D_of(a, cfg));
}
BENCHMARK(BM_DMap)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
