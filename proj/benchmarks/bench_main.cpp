#include <benchmark/benchmark.h>

#include "gz/euler/factors.hpp"
#include "gz/oracle/cosets.hpp"
#include "gz/oracle/whittaker.hpp"
#include "gz/params/weyl.hpp"
#include "gz/torus/sequence.hpp"
#include "gz/zeta/closed_forms.hpp"

namespace {

using namespace gz;

void BM_FactorProduct(benchmark::State& state) {
  const RationalFunction e = factor("E"), d = factor("Delta0");
  for (auto _ : state) benchmark::DoNotOptimize(e / d * factor("BKl"));
}
BENCHMARK(BM_FactorProduct);

void BM_WeylSumInverseDelta0(benchmark::State& state) {
  const RationalFunction f = 1 / factor("Delta0");
  for (auto _ : state) benchmark::DoNotOptimize(weylSum(weylGroupGSp4(), f));
}
BENCHMARK(BM_WeylSumInverseDelta0);

void BM_GejimaValue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gejimaValue(0, n, n, 0));
}
BENCHMARK(BM_GejimaValue)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_TorusIntegral(benchmark::State& state) {
  const TorusSequence rho = gl2Sequence({Gl2Kind::rhoSph, 0, 1});
  const TorusSequence w1 = gl2Sequence({Gl2Kind::aStab, 0, 1}), w2 = gl2Sequence({Gl2Kind::aStab, 0, 2});
  for (auto _ : state) benchmark::DoNotOptimize(torusIntegral(rho, w1, w2));
}
BENCHMARK(BM_TorusIntegral)->Unit(benchmark::kMillisecond);

void BM_EnumerateCosets(benchmark::State& state) {
  const auto p = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerateCosets("U2", iwahoriLevel(Group::GSp4, 1), p));
}
BENCHMARK(BM_EnumerateCosets)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SphericalWhittaker(benchmark::State& state) {
  const PGroupElement g = rootElement(Group::GSp4, 0, 2, Rational(1, 4), 2) * tElement(2, 1, 2) * etaElement(2);
  for (auto _ : state) benchmark::DoNotOptimize(sphericalWhittakerValue(g));
}
BENCHMARK(BM_SphericalWhittaker);

}  // namespace

BENCHMARK_MAIN();
