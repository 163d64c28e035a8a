#include <benchmark/benchmark.h>

#include "graphdisc/discrepancy.hpp"

using namespace graphdisc;

namespace {

// the outer minimization; the 3x3 grid sweeps 2^11 labelings, the 2xk
// strips grow by a factor of 8 per extra column
void BM_ExactSweepGrid3x3(benchmark::State& state) {
    Graph g = make_grid(3, 3);
    for (auto _ : state) {
        auto report = exact_discrepancy(g, FamilyKind::spanning_trees);
        benchmark::DoNotOptimize(report.value);
    }
}
BENCHMARK(BM_ExactSweepGrid3x3);

void BM_ExactSweepStrip(benchmark::State& state) {
    Graph g = make_grid(2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto report = exact_discrepancy(g, FamilyKind::spanning_trees);
        benchmark::DoNotOptimize(report.value);
    }
    state.SetComplexityN(g.edge_count());
}
BENCHMARK(BM_ExactSweepStrip)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

void BM_ExactSweepThreads(benchmark::State& state) {
    Graph g = make_grid(3, 4);
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto report =
            exact_discrepancy(g, FamilyKind::spanning_trees, std::uint64_t{1} << 26, threads);
        benchmark::DoNotOptimize(report.value);
    }
}
BENCHMARK(BM_ExactSweepThreads)->Arg(1)->Arg(2)->Arg(4);

} // namespace
