#include "graphdisc/family.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace graphdisc {

std::string family_code(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::spanning_trees: return "tn";
        case FamilyKind::hamilton_cycles: return "h";
        case FamilyKind::hamilton_paths: return "pn";
        case FamilyKind::trees: return "t";
        case FamilyKind::paths: return "p";
    }
    throw std::invalid_argument("unknown family kind");
}

FamilyKind parse_family(const std::string& code) {
    if (code == "tn") return FamilyKind::spanning_trees;
    if (code == "h") return FamilyKind::hamilton_cycles;
    if (code == "pn") return FamilyKind::hamilton_paths;
    if (code == "t") return FamilyKind::trees;
    if (code == "p") return FamilyKind::paths;
    throw std::invalid_argument("unknown family code '" + code + "' (expected tn|h|pn|t|p)");
}

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::spanning_trees: return "spanning-trees";
        case FamilyKind::hamilton_cycles: return "hamilton-cycles";
        case FamilyKind::hamilton_paths: return "hamilton-paths";
        case FamilyKind::trees: return "trees";
        case FamilyKind::paths: return "paths";
    }
    throw std::invalid_argument("unknown family kind");
}

namespace {

struct SubgraphShape {
    std::vector<int> degree;        // over touched vertices only
    std::vector<VertexId> vertices; // touched vertices
    int edge_count = 0;
    bool connected = true;
    bool acyclic = true;
};

SubgraphShape inspect(const Graph& g, std::span<const EdgeId> edges) {
    SubgraphShape shape;
    shape.degree.assign(g.vertex_count(), 0);
    std::vector<VertexId> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    std::vector<char> seen_edge(g.edge_count(), 0);
    for (EdgeId e : edges) {
        g.check_edge(e);
        if (seen_edge[e]) return {{}, {}, -1, false, false}; // duplicate edge: never a member
        seen_edge[e] = 1;
        auto [u, v] = g.edge(e);
        if (shape.degree[u]++ == 0) shape.vertices.push_back(u);
        if (shape.degree[v]++ == 0) shape.vertices.push_back(v);
        ++shape.edge_count;
        VertexId ru = find(u), rv = find(v);
        if (ru == rv)
            shape.acyclic = false;
        else
            parent[ru] = rv;
    }
    if (!shape.vertices.empty()) {
        VertexId root = find(shape.vertices.front());
        for (VertexId v : shape.vertices)
            if (find(v) != root) {
                shape.connected = false;
                break;
            }
    }
    return shape;
}

bool is_path_shape(const SubgraphShape& s) {
    if (s.edge_count == 0) return true; // single vertex
    if (!s.connected || !s.acyclic) return false;
    int endpoints = 0;
    for (VertexId v : s.vertices) {
        if (s.degree[v] > 2) return false;
        if (s.degree[v] == 1) ++endpoints;
    }
    return endpoints == 2;
}

} // namespace

bool is_family_member(const Graph& g, FamilyKind kind, std::span<const EdgeId> edges) {
    const int n = g.vertex_count();
    SubgraphShape s = inspect(g, edges);
    if (s.edge_count < 0) return false;
    switch (kind) {
        case FamilyKind::spanning_trees:
            if (n == 1) return s.edge_count == 0;
            return s.edge_count == n - 1 && s.acyclic &&
                   static_cast<int>(s.vertices.size()) == n && s.connected;
        case FamilyKind::hamilton_cycles: {
            if (n < 3 || s.edge_count != n || static_cast<int>(s.vertices.size()) != n ||
                !s.connected)
                return false;
            for (VertexId v : s.vertices)
                if (s.degree[v] != 2) return false;
            return true;
        }
        case FamilyKind::hamilton_paths:
            if (n == 1) return s.edge_count == 0;
            return s.edge_count == n - 1 && static_cast<int>(s.vertices.size()) == n &&
                   is_path_shape(s);
        case FamilyKind::trees:
            return s.edge_count == 0 || (s.acyclic && s.connected);
        case FamilyKind::paths:
            return is_path_shape(s);
    }
    return false;
}

Witness make_witness(const Graph& g, const Labeling& f, FamilyKind kind,
                     std::vector<EdgeId> edges) {
    std::sort(edges.begin(), edges.end());
    if (!is_family_member(g, kind, edges))
        throw std::invalid_argument("edge set is not a valid " + family_name(kind) + " member");
    Witness w;
    w.kind = kind;
    w.sum = subgraph_sum(f, edges);
    w.edges = std::move(edges);
    return w;
}

std::string Witness::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = family_code(kind);
    j["edges"] = edges;
    j["sum"] = sum;
    return j.dump();
}

} // namespace graphdisc
