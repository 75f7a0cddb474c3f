#include <benchmark/benchmark.h>

#include "cantor/hausdorff.hpp"
#include "cantor/rational.hpp"
#include "cantor/space_filling.hpp"

namespace {

using cantor::Rational;

static void BM_CurveValue(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    Rational x(1, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor::lebesgue_curve(x, d));
    }
}
BENCHMARK(BM_CurveValue)->Arg(2)->Arg(3);

static void BM_CurvePreimage(benchmark::State& state) {
    cantor::PointD p{{Rational(3, 8), Rational(5, 8)}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor::lebesgue_curve_preimage(p));
    }
}
BENCHMARK(BM_CurvePreimage);

static void BM_SampleCurve(benchmark::State& state) {
    int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor::sample_curve(2, depth));
    }
}
BENCHMARK(BM_SampleCurve)->DenseRange(2, 8, 2);

static cantor::CompactBoxSet unit_square() {
    return {2, {cantor::Box{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}}}};
}

static void BM_BuildCover(benchmark::State& state) {
    cantor::CompactBoxSet target = unit_square();
    int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor::build_cover(target, depth));
    }
}
BENCHMARK(BM_BuildCover)->DenseRange(1, 5);

static void BM_HausdorffMapTrace(benchmark::State& state) {
    cantor::NestedCover cover = cantor::build_cover(unit_square(), 4);
    Rational x(1, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor::hausdorff_map_trace(cover, x));
    }
}
BENCHMARK(BM_HausdorffMapTrace);

static void BM_LeafPreimage(benchmark::State& state) {
    cantor::NestedCover cover = cantor::build_cover(unit_square(), 4);
    std::size_t leaf = cover.leaf_count() - 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor::leaf_preimage(cover, leaf));
    }
}
BENCHMARK(BM_LeafPreimage);

}  // namespace

BENCHMARK_MAIN();
