#include <benchmark/benchmark.h>

#include "cantor/cantor_set.hpp"
#include "cantor/digit_expansion.hpp"
#include "cantor/rational.hpp"

namespace {

using cantor::Rational;

static void BM_Expand(benchmark::State& state) {
    // 1/7 has a 6-digit cycle base 3; scale the denominator for longer cycles.
    Rational x(1, 7 * state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor::expand(x, 3));
    }
}
BENCHMARK(BM_Expand)->Arg(1)->Arg(11)->Arg(143)->Arg(14003);

static void BM_ExpansionValue(benchmark::State& state) {
    cantor::DigitExpansion e = cantor::expand(Rational(1, 14003), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(value(e));
    }
}
BENCHMARK(BM_ExpansionValue);

static void BM_Membership(benchmark::State& state) {
    // 1/4 = 0.(02)_3 stays in the set; 1/2 falls in the first gap.
    Rational in(1, 4);
    Rational out(1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor::membership(in));
        benchmark::DoNotOptimize(cantor::membership(out));
    }
}
BENCHMARK(BM_Membership);

static void BM_Iterate(benchmark::State& state) {
    int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor::cantor_iterate(depth));
    }
    state.SetComplexityN(1 << depth);
}
BENCHMARK(BM_Iterate)->DenseRange(4, 16, 4)->Complexity();

static void BM_MeasureDiagnostics(benchmark::State& state) {
    int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor::measure_diagnostics(depth));
    }
}
BENCHMARK(BM_MeasureDiagnostics)->Arg(20)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
