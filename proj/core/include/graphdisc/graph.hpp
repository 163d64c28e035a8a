#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphdisc {

using VertexId = int;
using EdgeId = int;

/// Coordinate layout of a grid graph P_rows x P_cols. Vertex (i, j) sits in
/// row i (0 = bottom) and column j (0 = left); vertex ids are row-major.
/// Edge ids are deterministic: all horizontal edges first in row-major
/// order, then all vertical edges in row-major order, so tests can name
/// edges without searching.
struct GridSpec {
    int rows = 0;
    int cols = 0;

    int vertex_count() const { return rows * cols; }
    VertexId vertex(int i, int j) const { return i * cols + j; }
    std::pair<int, int> coords(VertexId v) const { return {v / cols, v % cols}; }

    int horizontal_count() const { return rows * (cols - 1); }
    int vertical_count() const { return (rows - 1) * cols; }

    /// Edge (i,j)-(i,j+1).
    EdgeId horizontal_edge(int i, int j) const { return i * (cols - 1) + j; }
    /// Edge (i,j)-(i+1,j).
    EdgeId vertical_edge(int i, int j) const { return horizontal_count() + i * cols + j; }

    bool is_horizontal(EdgeId e) const { return e < horizontal_count(); }
};

/// Immutable simple graph with dense vertex ids 0..n-1 and dense, stable
/// edge ids 0..m-1. Deletions used in proofs are expressed as filtered
/// views, never by mutating a Graph.
class Graph {
public:
    struct AdjEntry {
        VertexId vertex;
        EdgeId edge;
    };

    Graph() = default;

    /// Builds a graph from an edge list. Rejects loops, parallel edges and
    /// out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Endpoints of an edge, smaller id first.
    std::pair<VertexId, VertexId> edge(EdgeId e) const;

    std::span<const AdjEntry> neighbors(VertexId v) const;
    int degree(VertexId v) const;

    /// Edge id joining u and v, if present.
    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const { return edge_between(u, v).has_value(); }

    bool connected() const;

    int max_degree() const;

    /// Grid coordinate map, present iff the graph came from make_grid.
    const std::optional<GridSpec>& grid() const { return grid_; }

    void check_vertex(VertexId v) const;
    void check_edge(EdgeId e) const;

private:
    friend Graph make_grid(int, int);

    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<AdjEntry>> adj_;
    std::optional<GridSpec> grid_;
};

/// P_k [] P_l grid with k*(l-1) + l*(k-1) edges and the GridSpec attached.
Graph make_grid(int rows, int cols);

/// Complete graph K_n.
Graph make_complete(int n);

/// K_n minus the edges of a clique on n/4 vertices; the removed clique's
/// vertex set becomes independent and every vertex keeps degree >= 3n/4.
struct CompleteMinusClique {
    Graph graph;
    std::vector<VertexId> independent_set; // n/4 vertices, pairwise non-adjacent
    std::vector<VertexId> rest;
};
CompleteMinusClique make_complete_minus_clique(int n);

/// True iff the edge set induces vertex-disjoint simple paths
/// (max degree <= 2 and acyclic).
bool is_linear_forest(const Graph& g, std::span<const EdgeId> edges);

/// Connected components of the subgraph keeping edges where the filter is
/// true (all edges when no filter). Every vertex appears in exactly one
/// component; components and their vertices are sorted.
std::vector<std::vector<VertexId>> components(
    const Graph& g, const std::function<bool(EdgeId)>& edge_filter = {});

/// Subgraph induced by a vertex set, with id maps back to the parent.
struct InducedSubgraph {
    Graph graph;
    std::vector<VertexId> vertex_to_parent; // sub id -> parent id
    std::vector<int> vertex_from_parent;    // parent id -> sub id, -1 outside
    std::vector<EdgeId> edge_to_parent;     // sub edge id -> parent edge id
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

/// Text format: first line n, then one "u v" line per edge, 0-based.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

/// JSON mirror {"n": n, "edges": [[u, v], ...]}.
Graph graph_from_json(const std::string& json_text);
std::string graph_to_json(const Graph& g);

} // namespace graphdisc
