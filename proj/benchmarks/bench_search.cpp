#include <benchmark/benchmark.h>

#include <random>

#include "graphdisc/hamilton_search.hpp"
#include "graphdisc/random_regular.hpp"

using namespace graphdisc;

namespace {

void BM_HamiltonWithForest(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = make_complete(n);
    std::mt19937_64 rng(5);
    Labeling f = Labeling::random(g.edge_count(), rng);
    std::vector<EdgeId> forest{*g.edge_between(0, 1), *g.edge_between(2, 3)};
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto r = hamilton_with_forest(g, f, forest, 0.05, seed++);
        benchmark::DoNotOptimize(r.status);
    }
}
BENCHMARK(BM_HamiltonWithForest)->Arg(16)->Arg(32)->Arg(64);

void BM_SearchDense(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = make_complete(n);
    std::mt19937_64 rng(17);
    Labeling f = Labeling::random(g.edge_count(), rng);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto r = search_dense(g, f, 0.05, seed++, 0); // no exact fallback while timing
        benchmark::DoNotOptimize(r.achieved);
    }
}
BENCHMARK(BM_SearchDense)->Arg(20)->Arg(32);

void BM_RandomRegularSample(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto sample = random_regular(n, 3, seed++);
        benchmark::DoNotOptimize(sample.attempts);
    }
}
BENCHMARK(BM_RandomRegularSample)->Arg(100)->Arg(1000)->Arg(10000);

void BM_FragmentingLabeling(benchmark::State& state) {
    auto sample = random_regular(static_cast<int>(state.range(0)), 3, 3);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        Labeling f = fragmenting_labeling(sample.graph, seed++);
        benchmark::DoNotOptimize(f.size());
    }
}
BENCHMARK(BM_FragmentingLabeling)->Arg(1000)->Arg(10000);

} // namespace
