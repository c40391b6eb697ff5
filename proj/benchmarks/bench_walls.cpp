#include <benchmark/benchmark.h>

#include "bridgeland/render.hpp"
#include "bridgeland/walls.hpp"

using namespace bridgeland;

static void BM_PseudoWalls(benchmark::State& state) {
    const ChernVector v = twisted_ideal_class(state.range(0));
    const Region region(Rational(0), Rational(1));
    const EnumerationOptions options{static_cast<unsigned>(state.range(2))};
    std::size_t walls = 0;
    for (auto _ : state) {
        auto result = enumerate_pseudo_walls(v, region, state.range(1), options);
        walls = result.size();
        benchmark::DoNotOptimize(result);
    }
    state.counters["walls"] = static_cast<double>(walls);
}
BENCHMARK(BM_PseudoWalls)
    ->ArgNames({"n", "rank", "threads"})
    ->ArgsProduct({{5, 10, 20}, {4, 8, 16}, {1}})
    ->Args({20, 16, 2})
    ->Args({20, 16, 4})
    ->Args({20, 32, 1})
    ->Args({20, 32, 4})
    ->Unit(benchmark::kMicrosecond)
    ->UseRealTime();

static void BM_PseudoWallsBoundedU(benchmark::State& state) {
    const ChernVector v = twisted_ideal_class(12);
    const Region region(Rational(-2), Rational(2), Rational(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_pseudo_walls(v, region, 6));
}
BENCHMARK(BM_PseudoWallsBoundedU)->ArgName("u_max")->Arg(1)->Arg(4)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_SeriesCoefficients(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(series_coefficients(state.range(0)));
}
BENCHMARK(BM_SeriesCoefficients)->Arg(50)->Arg(5000);

static void BM_RenderFigure(benchmark::State& state) {
    const auto walls = actual_walls(state.range(0));
    RenderWindow window{Rational(-1), Rational(3), Rational(4)};
    for (auto _ : state) benchmark::DoNotOptimize(render_walls_svg(walls, window));
}
BENCHMARK(BM_RenderFigure)->Arg(10)->Arg(100);

BENCHMARK_MAIN();
