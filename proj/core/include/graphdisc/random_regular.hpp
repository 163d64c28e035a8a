#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphdisc/family.hpp"
#include "graphdisc/graph.hpp"
#include "graphdisc/labeling.hpp"

namespace graphdisc {

struct RandomRegularSample {
    Graph graph;
    std::uint64_t attempts = 0; // configuration-model draws until a simple one
};

/// Uniform random d-regular simple graph via the configuration model with
/// rejection of loops and parallel edges; uniformity over simple outcomes
/// is exact. Throws sampling_error when the attempt budget runs out.
RandomRegularSample random_regular(int n, int d, std::uint64_t seed,
                                   std::uint64_t max_attempts = 100000);

/// Component statistics of the positive subgraph G+ after normalizing the
/// labeling so that |N| <= |P| (the labeling is negated when needed).
struct ComponentStats {
    std::uint64_t component_count = 0;           // t
    std::uint64_t isolated_vertices = 0;         // a_1
    std::map<int, std::uint64_t> size_histogram; // a_i keyed by component size
    int negative_edges = 0;                      // |N| after normalization
    int positive_edges = 0;                      // |P|
    bool negated = false;                        // convention flip applied
};
ComponentStats positive_component_stats(const Graph& g, const Labeling& f);

/// Spanning tree maximizing the positive edge count. Uses exactly t-1
/// negative edges (contract the components of G+: any spanning tree needs
/// t-1 crossing edges and crossing edges are negative), which certifies
/// f(T) = n - 1 - 2(t - 1).
struct GreedyTreeResult {
    Witness tree;
    int negative_edges_used = 0;
    std::uint64_t positive_components = 0; // t
    int certified_sum = 0;                 // n - 1 - 2(t-1) = f(tree)
};
GreedyTreeResult positive_greedy_tree(const Graph& g, const Labeling& f);

/// min |boundary(U)| / |U| over nonempty U with |U| <= max_size. Exhaustive
/// below the subset budget, otherwise a seeded greedy local search that
/// upper-bounds the true minimum (flagged).
struct IsoperimetryResult {
    double ratio = 0.0;
    std::vector<VertexId> argmin;
    bool exhaustive = true;
};
IsoperimetryResult isoperimetry_scan(const Graph& g, int max_size,
                                     std::uint64_t subset_budget = 5'000'000,
                                     std::uint64_t seed = 1);

/// Short cycle counts X_3..X_k (Poisson with mean 2^j/(2j) in the 3-regular
/// limit).
std::vector<std::uint64_t> count_short_cycles(const Graph& g, int max_length);

/// Adversarial labeling heuristic: all edges incident to a greedy capped
/// independent set go negative, fragmenting G+ while keeping |N| <= |P|.
Labeling fragmenting_labeling(const Graph& g, std::uint64_t seed);

struct Section3Row {
    std::uint64_t sample_index = 0;
    std::uint64_t seed = 0;
    std::string labeling_kind; // "fragmenting" or "all-positive"
    std::uint64_t t = 0;
    std::uint64_t a1 = 0;
    int negative_edges = 0;
    int positive_edges = 0;
    int tree_negative_edges = 0;
    double witness_bound_over_n = 0.0; // (n + 1 - 2t) / n
    double eq1_residual = 0.0;         // t - |N|/2 - a1/4, the O(1) term measured
};

struct Section3Report {
    int n = 0;
    int d = 3;
    std::uint64_t samples = 0;
    std::uint64_t base_seed = 0;
    std::vector<Section3Row> rows;
    // aggregates over the fragmenting-labeling rows
    double mean_t_over_n = 0.0;
    double max_t_over_n = 0.0;
    double mean_a1_over_n = 0.0;
    double mean_witness_bound_over_n = 0.0;
    double max_eq1_residual = 0.0;
    std::uint64_t disconnected_skipped = 0;
};

/// Measured (never asserted) statistics of the spanning-tree lower bound
/// pipeline on random 3-regular graphs: per-sample fragmenting labeling
/// plus an all-positive control row.
Section3Report section3_experiment(int n, std::uint64_t samples, std::uint64_t seed);

} // namespace graphdisc
