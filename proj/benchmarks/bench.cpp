#include <benchmark/benchmark.h>

#include "expriordan/catalog.hpp"
#include "expriordan/orthopoly.hpp"
#include "expriordan/production.hpp"

namespace {

using namespace expriordan;

void BM_BuildTanh(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(entry("tanh").array(order));
}
BENCHMARK(BM_BuildTanh)->Arg(8)->Arg(16)->Arg(32);

void BM_RevertGompertz(benchmark::State& state) {
  const Series f = entry("gompertz").f_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(revert(f));
}
BENCHMARK(BM_RevertGompertz)->Arg(8)->Arg(16)->Arg(32);

void BM_ProductionDefinitional(benchmark::State& state) {
  const ExpRiordan a = entry("algebraic").array(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(production_definitional(a));
}
BENCHMARK(BM_ProductionDefinitional)->Arg(8)->Arg(16)->Arg(24);

void BM_ProductionAnalytic(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const ExpRiordan a = entry("algebraic").array(order);
  for (auto _ : state) benchmark::DoNotOptimize(production_analytic(za_sequences(a.g(), a.f()), order));
}
BENCHMARK(BM_ProductionAnalytic)->Arg(8)->Arg(16)->Arg(24);

void BM_HankelTransformTanh(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto seq = entry("tanh").f_series(2 * n).egf_coefficients();
  for (auto _ : state) benchmark::DoNotOptimize(hankel_transform(seq, n));
}
BENCHMARK(BM_HankelTransformTanh)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
