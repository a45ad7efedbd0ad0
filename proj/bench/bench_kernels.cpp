// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bezspline/hull.hpp"
#include "bezspline/serial.hpp"
#include "bezspline/spline.hpp"

using namespace bezspline;

namespace {

ControlPolygon random_polygon(std::size_t n) {
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> step(0.1, 2.0), value(-10.0, 10.0);
    ControlPolygon c;
    double t = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        c.tau.push_back(t);
        c.F.push_back(value(rng));
        t += step(rng);
    }
    return c;
}

SplineGrids grids_for(std::size_t n) {
    const auto c = random_polygon(n);
    return build_grids(c, NodePlacement::uniform(n - 1));
}

template <auto Kernel>
void BM_assemble(benchmark::State& state) {
    const auto g = grids_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(g));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_compute_q(benchmark::State& state) {
    const auto g = grids_for(state.range(0));
    const auto phi = solve_tridiagonal(assemble_system(g));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(g, phi));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_eval_many(benchmark::State& state) {
    const auto s = build_spline(random_polygon(state.range(0)), NodePlacement::uniform(state.range(0) - 1));
    const auto xs = uniform_grid(s.a(), s.b(), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(s, xs));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_hull_margin(benchmark::State& state) {
    const auto c = random_polygon(state.range(0));
    const auto s = build_spline(c, NodePlacement::uniform(c.size() - 1));
    std::vector<Point2> samples;
    for (const auto& p : sample(s, state.range(0))) samples.push_back({p.x, p.y});
    const auto control = to_points(c);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(control, samples));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_assemble<&bezspline::assemble_system>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_assemble<&serial::assemble_system>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_compute_q<&bezspline::compute_q>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_compute_q<&serial::compute_q>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_eval_many<&bezspline::eval_many>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_eval_many<&serial::eval_many>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_hull_margin<&bezspline::hull_margin>)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_hull_margin<&serial::hull_margin>)->Range(1 << 10, 1 << 18);

BENCHMARK_MAIN();
