#include <benchmark/benchmark.h>

#include <random>

#include "graphdisc/oracles.hpp"

using namespace graphdisc;

namespace {

Labeling fixed_random_labeling(int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return Labeling::random(m, rng);
}

void BM_SpanningTreeExtremeValues(benchmark::State& state) {
    Graph g = make_grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    Labeling f = fixed_random_labeling(g.edge_count(), 7);
    for (auto _ : state) {
        auto values = spanning_tree_extreme_values(g, f);
        benchmark::DoNotOptimize(values);
    }
}
BENCHMARK(BM_SpanningTreeExtremeValues)->Arg(4)->Arg(8)->Arg(16);

void BM_HamiltonExtremes(benchmark::State& state) {
    Graph g = make_complete(static_cast<int>(state.range(0)));
    Labeling f = fixed_random_labeling(g.edge_count(), 9);
    for (auto _ : state) {
        auto values = hamilton_extreme_values(g, f);
        benchmark::DoNotOptimize(values);
    }
}
BENCHMARK(BM_HamiltonExtremes)->Arg(10)->Arg(12)->Arg(14)->Arg(16);

void BM_PathMaxAbs(benchmark::State& state) {
    Graph g = make_grid(2, static_cast<int>(state.range(0)));
    Labeling f = fixed_random_labeling(g.edge_count(), 11);
    for (auto _ : state) {
        int value = path_max_abs_value(g, f);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_PathMaxAbs)->Arg(5)->Arg(7)->Arg(9);

void BM_TreeMaxAbs(benchmark::State& state) {
    Graph g = make_grid(3, static_cast<int>(state.range(0)));
    Labeling f = fixed_random_labeling(g.edge_count(), 13);
    for (auto _ : state) {
        int value = tree_max_abs_value(g, f);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_TreeMaxAbs)->Arg(3)->Arg(4);

void BM_SpanningTreeEnumeration(benchmark::State& state) {
    Graph g = make_grid(3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto count = count_family(g, FamilyKind::spanning_trees);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_SpanningTreeEnumeration)->Arg(3)->Arg(4);

} // namespace
