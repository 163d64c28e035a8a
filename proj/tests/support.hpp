#pragma once

// Shared instance generators for the test suites.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "graphdisc/graph.hpp"
#include "graphdisc/labeling.hpp"

namespace support {

using graphdisc::Graph;
using graphdisc::Labeling;
using graphdisc::VertexId;

/// Erdos-Renyi draw conditioned on connectivity (resamples until connected).
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        if (g.connected()) return g;
    }
    throw std::runtime_error("could not draw a connected graph");
}

/// Random graph with minimum degree at least `min_degree`: an Erdos-Renyi
/// base topped up with edges at deficient vertices.
inline Graph random_dense_graph(int n, int min_degree, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng)) adj[u][v] = adj[v][u] = 1;
    std::vector<int> deg(n, 0);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) deg[u] += adj[u][v];
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (VertexId u : order) {
        while (deg[u] < min_degree) {
            std::vector<VertexId> candidates;
            for (VertexId v = 0; v < n; ++v)
                if (v != u && !adj[u][v]) candidates.push_back(v);
            if (candidates.empty()) break;
            std::sort(candidates.begin(), candidates.end(),
                      [&](VertexId a, VertexId b) { return deg[a] < deg[b]; });
            VertexId v = candidates.front();
            adj[u][v] = adj[v][u] = 1;
            ++deg[u];
            ++deg[v];
        }
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (adj[u][v]) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

/// The labeling of the tight example: all edges at the independent set
/// negative, everything else positive.
inline Labeling tight_example_labeling(const Graph& g, const std::vector<VertexId>& independent) {
    std::vector<char> in_set(g.vertex_count(), 0);
    for (VertexId v : independent) in_set[v] = 1;
    Labeling f = Labeling::all_positive(g.edge_count());
    for (graphdisc::EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (in_set[u] || in_set[v]) f.set(e, -1);
    }
    return f;
}

/// Applies a vertex permutation; edge ids are re-assigned in the permuted
/// edge order.
inline Graph permuted_graph(const Graph& g, const std::vector<VertexId>& perm) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (graphdisc::EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        edges.emplace_back(perm[u], perm[v]);
    }
    return Graph::from_edges(g.vertex_count(), edges);
}

} // namespace support
