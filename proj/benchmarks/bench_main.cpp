#include "qforge/embed.hpp"
#include "qforge/linalg.hpp"
#include "qforge/pipeline.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qforge;

namespace {

RatMat random_matrix(std::mt19937_64& eng, int n, int height) {
    RatMat m(n, n);
    for (auto& e : m.entries)
        e = Rational(static_cast<long>(eng() % (2 * height + 1)) - height);
    return m;
}

void BM_rref(benchmark::State& state) {
    std::mt19937_64 eng(1);
    const RatMat m = random_matrix(eng, static_cast<int>(state.range(0)), 10);
    for (auto _ : state) {
        auto r = rref(m);
        benchmark::DoNotOptimize(r.pivot_cols);
    }
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

void BM_end_ring_kronecker(benchmark::State& state) {
    const Representation v = zwara_rep();
    for (auto _ : state) {
        auto d = hom_ext_dims(v, v);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_end_ring_kronecker);

void BM_classify_family(benchmark::State& state) {
    const auto family = forge_family();
    for (auto _ : state) {
        for (const auto& nq : family) {
            auto c = classify(nq.quiver);
            benchmark::DoNotOptimize(c);
        }
    }
}
BENCHMARK(BM_classify_family);

void BM_build_pair_three_armed_star(benchmark::State& state) {
    Quiver q;
    q.vertex_count = 7;
    q.arrows = {{2, 1}, {1, 0}, {4, 3}, {3, 0}, {6, 5}, {5, 0}};
    for (auto _ : state) {
        auto p = build_pair(q, RngSpec{9, 10});
        benchmark::DoNotOptimize(p.m);
    }
}
BENCHMARK(BM_build_pair_three_armed_star);

void BM_forge_theta3(benchmark::State& state) {
    const Quiver q = theta(3);
    for (auto _ : state) {
        auto r = forge(q, RngSpec{7, 10});
        benchmark::DoNotOptimize(r.w.dim);
    }
}
BENCHMARK(BM_forge_theta3);

void BM_forge_wild5(benchmark::State& state) {
    Quiver q;
    q.vertex_count = 5;
    q.arrows = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}};
    for (auto _ : state) {
        auto r = forge(q, RngSpec{7, 10});
        benchmark::DoNotOptimize(r.w.dim);
    }
}
BENCHMARK(BM_forge_wild5);

} // namespace

BENCHMARK_MAIN();
