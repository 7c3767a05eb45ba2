#include <benchmark/benchmark.h>

#include "kneserlab/defect.hpp"
#include "kneserlab/geometry.hpp"
#include "kneserlab/kneser.hpp"
#include "kneserlab/topology.hpp"

using namespace kneserlab;

static void BM_BuildKneser(benchmark::State& state) {
    SetSystem F = k_subsets((int)state.range(0), 3);
    for (auto _ : state) benchmark::DoNotOptimize(build_kneser(F, 3));
}
BENCHMARK(BM_BuildKneser)->Arg(9)->Arg(10)->Arg(11);

static void BM_ChromaticNumber(benchmark::State& state) {
    Hypergraph H = build_kneser(k_subsets((int)state.range(0), 2), 2);
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(H));
}
BENCHMARK(BM_ChromaticNumber)->Arg(5)->Arg(6)->Arg(7);

static void BM_ColorabilityDefect(benchmark::State& state) {
    SetSystem F = k_subsets((int)state.range(0), 3);
    for (auto _ : state) benchmark::DoNotOptimize(colorability_defect(F, 3));
}
BENCHMARK(BM_ColorabilityDefect)->Arg(9)->Arg(10)->Arg(12);

static void BM_HullsIntersect(benchmark::State& state) {
    PointConfig cfg = stretched_config(2, 7, 2);
    std::vector<std::vector<int>> blocks{{0, 2, 4}, {1, 3, 5, 6}};
    for (auto _ : state) benchmark::DoNotOptimize(hulls_intersect(cfg, blocks));
}
BENCHMARK(BM_HullsIntersect);

static void BM_TverbergEnumeration(benchmark::State& state) {
    PointConfig cfg = stretched_config(2, 6, 2);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_tverberg_partitions(cfg, 2));
}
BENCHMARK(BM_TverbergEnumeration);

static void BM_BettiNumbers(benchmark::State& state) {
    SimplicialComplex K =
        deleted_join(SimplicialComplex::full_simplex((int)state.range(0)), 2, 2);
    Field f{false, 2};
    for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(K, f));
}
BENCHMARK(BM_BettiNumbers)->Arg(4)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
