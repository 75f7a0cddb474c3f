#include <benchmark/benchmark.h>

#include "cantor/cantor_function.hpp"
#include "cantor/rational.hpp"

namespace {

using cantor::Rational;

static void BM_StaircaseValue(benchmark::State& state) {
    Rational x(1, 13);  // periodic expansion, stays in the set
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor::cantor_function(x));
    }
}
BENCHMARK(BM_StaircaseValue);

static void BM_StaircaseExtended(benchmark::State& state) {
    Rational x(5, 27);  // interior of a level-2 gap
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor::cantor_function_extended(x));
    }
}
BENCHMARK(BM_StaircaseExtended);

static void BM_ApproximantBuild(benchmark::State& state) {
    int level = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor::polygonal_approximant(level));
    }
    state.SetComplexityN(1 << level);
}
BENCHMARK(BM_ApproximantBuild)->DenseRange(4, 16, 4)->Complexity();

static void BM_ApproximantEvaluate(benchmark::State& state) {
    cantor::PolygonalApproximant a =
        cantor::polygonal_approximant(static_cast<int>(state.range(0)));
    Rational x(355, 1024);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.evaluate(x));
    }
}
BENCHMARK(BM_ApproximantEvaluate)->Arg(4)->Arg(10)->Arg(16);

static void BM_DifferenceQuotient(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor::difference_quotient(Rational(0), n));
    }
}
BENCHMARK(BM_DifferenceQuotient)->Arg(5)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
