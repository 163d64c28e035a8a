#include "graphdisc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace graphdisc {

Graph Graph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.resize(n);
    g.edges_.reserve(edges.size());
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) +
                                        " " + std::to_string(b));
        if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge " + std::to_string(key.first) + " " +
                                        std::to_string(key.second));
        EdgeId id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.emplace_back(key.first, key.second);
        g.adj_[key.first].push_back({key.second, id});
        g.adj_[key.second].push_back({key.first, id});
    }
    return g;
}

std::pair<VertexId, VertexId> Graph::edge(EdgeId e) const {
    check_edge(e);
    return edges_[e];
}

std::span<const Graph::AdjEntry> Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

std::optional<EdgeId> Graph::edge_between(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (degree(v) < degree(u)) std::swap(u, v);
    for (const auto& entry : adj_[u])
        if (entry.vertex == v) return entry.edge;
    return std::nullopt;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (const auto& entry : adj_[v]) {
            if (!seen[entry.vertex]) {
                seen[entry.vertex] = 1;
                ++visited;
                stack.push_back(entry.vertex);
            }
        }
    }
    return visited == n_;
}

int Graph::max_degree() const {
    int d = 0;
    for (VertexId v = 0; v < n_; ++v) d = std::max(d, static_cast<int>(adj_[v].size()));
    return d;
}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("unknown vertex " + std::to_string(v));
}

void Graph::check_edge(EdgeId e) const {
    if (e < 0 || e >= edge_count()) throw std::out_of_range("unknown edge " + std::to_string(e));
}

Graph make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
    GridSpec spec{rows, cols};
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(static_cast<size_t>(spec.horizontal_count() + spec.vertical_count()));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j + 1 < cols; ++j)
            edges.emplace_back(spec.vertex(i, j), spec.vertex(i, j + 1));
    for (int i = 0; i + 1 < rows; ++i)
        for (int j = 0; j < cols; ++j)
            edges.emplace_back(spec.vertex(i, j), spec.vertex(i + 1, j));
    Graph g = Graph::from_edges(rows * cols, edges);
    g.grid_ = spec;
    return g;
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

CompleteMinusClique make_complete_minus_clique(int n) {
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("K_n minus K_{n/4} needs n divisible by 4, got " +
                                    std::to_string(n));
    const int k = n / 4;
    CompleteMinusClique result;
    result.independent_set.resize(k);
    std::iota(result.independent_set.begin(), result.independent_set.end(), 0);
    result.rest.resize(n - k);
    std::iota(result.rest.begin(), result.rest.end(), k);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (u >= k || v >= k) edges.emplace_back(u, v);
    result.graph = Graph::from_edges(n, edges);
    return result;
}

bool is_linear_forest(const Graph& g, std::span<const EdgeId> edges) {
    std::vector<int> deg(g.vertex_count(), 0);
    // union-find over endpoints for cycle detection
    std::vector<VertexId> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    std::vector<char> used(g.edge_count(), 0);
    for (EdgeId e : edges) {
        g.check_edge(e);
        if (used[e]) continue;
        used[e] = 1;
        auto [u, v] = g.edge(e);
        if (++deg[u] > 2 || ++deg[v] > 2) return false;
        VertexId ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

std::vector<std::vector<VertexId>> components(const Graph& g,
                                              const std::function<bool(EdgeId)>& edge_filter) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<VertexId>> out;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<VertexId> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (const auto& entry : g.neighbors(v)) {
                if (edge_filter && !edge_filter(entry.edge)) continue;
                if (comp[entry.vertex] < 0) {
                    comp[entry.vertex] = id;
                    stack.push_back(entry.vertex);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
    InducedSubgraph out;
    out.vertex_from_parent.assign(g.vertex_count(), -1);
    for (VertexId v : vertices) {
        g.check_vertex(v);
        if (out.vertex_from_parent[v] != -1)
            throw std::invalid_argument("induced subgraph: vertex " + std::to_string(v) +
                                        " listed twice");
        out.vertex_from_parent[v] = static_cast<int>(out.vertex_to_parent.size());
        out.vertex_to_parent.push_back(v);
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        int su = out.vertex_from_parent[u], sv = out.vertex_from_parent[v];
        if (su < 0 || sv < 0) continue;
        edges.emplace_back(su, sv);
        out.edge_to_parent.push_back(e);
    }
    out.graph = Graph::from_edges(static_cast<int>(out.vertex_to_parent.size()), edges);
    return out;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<VertexId, VertexId>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // strip trailing carriage returns and skip blanks
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 0)
                throw std::invalid_argument("line 1: expected vertex count");
            std::string extra;
            if (fields >> extra)
                throw std::invalid_argument("line 1: trailing content after vertex count");
            continue;
        }
        VertexId u, v;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected 'u v' pair");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::invalid_argument("empty graph text");
    return Graph::from_edges(n, edges);
}

std::string serialize_graph(const Graph& g) {
    // canonical form: edges sorted lexicographically
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) edges.push_back(g.edge(e));
    std::sort(edges.begin(), edges.end());
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph graph_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    int n = j.at("n").get<int>();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("edge entries must be [u, v] pairs");
        edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    return Graph::from_edges(n, edges);
}

std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        edges.push_back({u, v});
    }
    j["edges"] = std::move(edges);
    return j.dump();
}

} // namespace graphdisc
