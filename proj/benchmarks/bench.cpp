#include <benchmark/benchmark.h>

#include <random>

#include "geomcolor/bottomless_dual.hpp"
#include "geomcolor/bottomless_primal.hpp"
#include "geomcolor/generate.hpp"
#include "geomcolor/halfplane_dual.hpp"
#include "geomcolor/hull.hpp"
#include "geomcolor/routing.hpp"

namespace {

using namespace geomcolor;

void BM_ColorBottomlessPoints(benchmark::State& state) {
    auto inst = generate_instance(Family::b_points, static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(color_points_b_k2(inst.points));
    }
}
BENCHMARK(BM_ColorBottomlessPoints)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_ColorBottomlessRectsK2(benchmark::State& state) {
    auto inst = generate_instance(Family::b_rects, static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(color_rects_b_k2(inst.rects));
    }
}
BENCHMARK(BM_ColorBottomlessRectsK2)->Arg(200)->Arg(2000);

void BM_ColorBottomlessRectsK3(benchmark::State& state) {
    auto inst = generate_instance(Family::b_rects, static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(color_rects_b_k3(inst.rects));
    }
}
BENCHMARK(BM_ColorBottomlessRectsK3)->Arg(200)->Arg(2000);

void BM_ColorHalfplanesK2(benchmark::State& state) {
    auto inst = generate_instance(Family::h_rects, static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(color_halfplanes_k2(inst.halfplanes));
    }
}
BENCHMARK(BM_ColorHalfplanesK2)->Arg(200)->Arg(2000);

void BM_ConvexHull(benchmark::State& state) {
    // The hull tolerates degenerate input, so skip the general-position
    // rejection sampling and draw a raw cloud.
    std::mt19937_64 rng(7);
    std::vector<Point> pts;
    for (std::int64_t i = 0; i < state.range(0); ++i) {
        pts.push_back({static_cast<std::int64_t>(rng() % 1000000),
                       static_cast<std::int64_t>(rng() % 1000000)});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(convex_hull(pts));
    }
}
BENCHMARK(BM_ConvexHull)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
