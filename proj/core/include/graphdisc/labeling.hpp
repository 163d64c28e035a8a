#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "graphdisc/graph.hpp"

namespace graphdisc {

/// Total edge labeling f: E(G) -> {-1, +1}, indexed by edge id.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<std::int8_t> signs);

    static Labeling all_positive(int edge_count);
    static Labeling all_negative(int edge_count);
    static Labeling random(int edge_count, std::mt19937_64& rng);

    /// Sweep indexing: edge i gets -1 iff bit i of `bits` is set.
    static Labeling from_bits(int edge_count, std::uint64_t bits);

    int size() const { return static_cast<int>(signs_.size()); }
    int sign(EdgeId e) const;
    void set(EdgeId e, int sign);

    Labeling negated() const;

    bool operator==(const Labeling&) const = default;

    /// '+'/'-' characters indexed by edge id.
    std::string to_string() const;
    static Labeling parse(const std::string& text);

    /// JSON array of +1/-1.
    std::string to_json() const;
    static Labeling from_json(const std::string& json_text);

private:
    std::vector<std::int8_t> signs_;
};

/// Sum of labels over an edge set.
int subgraph_sum(const Labeling& f, std::span<const EdgeId> edges);

/// Labeling of a subgraph whose edge ids map back into f's edge space.
Labeling restrict_labeling(const Labeling& f, std::span<const EdgeId> edge_to_parent);

/// N+(v) and N-(v): neighbors reached through positive / negative edges.
struct SignedNeighborhood {
    std::vector<VertexId> positive;
    std::vector<VertexId> negative;
};
SignedNeighborhood signed_neighborhoods(const Graph& g, const Labeling& f, VertexId v);

int positive_degree(const Graph& g, const Labeling& f, VertexId v);
int negative_degree(const Graph& g, const Labeling& f, VertexId v);

/// nu-balance classification: a vertex is balanced when it has at least
/// ceil(nu*n) incident edges of each sign; unbalanced vertices are tagged
/// by their majority sign.
enum class BalanceTag : std::uint8_t { balanced, unbalanced_positive, unbalanced_negative };

struct BalanceClass {
    std::vector<BalanceTag> tags; // per vertex
    double nu = 0.0;
    int threshold = 0; // ceil(nu * n)

    int balanced_count() const;
    std::vector<VertexId> balanced_vertices() const;
};
BalanceClass classify_balance(const Graph& g, const Labeling& f, double nu);

/// Change in a cycle's label sum when edge uw is replaced by the detour
/// u-v-w: f(uv) + f(vw) - f(uw). Requires uvw to be a triangle of g.
int triangle_g(const Graph& g, const Labeling& f, VertexId v, VertexId u, VertexId w);

/// Vertex colors keyed by the g-value their witnessing triangles share.
enum class VertexColor : std::uint8_t { red = 0, blue = 1, dark_red = 2, dark_blue = 3 };

/// red -> -1, blue -> +1, dark_red -> -3, dark_blue -> +3.
int color_g_value(VertexColor c);

/// Per-vertex color sets under an explicit triangle-count cutoff tau:
/// color c is present at v iff at least tau triangles T containing v have
/// g(v, T) equal to the color's value. Vertices may hold several colors or
/// none.
struct ColorSet {
    int tau = 1;
    /// triangle_counts[v][c]: triangles at v with g-value color_g_value(c).
    std::vector<std::array<int, 4>> triangle_counts;
    std::vector<std::uint8_t> colors; // bitmask over VertexColor

    bool has_color(VertexId v, VertexColor c) const;
    int color_count(VertexId v) const;
    std::vector<VertexId> multi_colored() const;
    std::vector<VertexId> uncolored() const;
    int triangles_at(VertexId v) const;
};
ColorSet color_vertices(const Graph& g, const Labeling& f, int tau);

} // namespace graphdisc
