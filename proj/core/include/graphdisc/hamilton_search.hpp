#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphdisc/family.hpp"
#include "graphdisc/graph.hpp"
#include "graphdisc/labeling.hpp"

namespace graphdisc {

enum class SearchStatus : int {
    ok,
    heuristic_failure,       // rotation-extension exhausted its restarts
    precondition_violation,  // density / forest-size hypotheses unmet and search failed
};

struct SearchLimits {
    std::uint64_t restarts = 400;
    std::uint64_t rotations_per_restart = 0; // 0: scaled with n
    int exhaustive_cap = 12;                 // deterministic fallback below this size
};

struct HamiltonSearchResult {
    SearchStatus status = SearchStatus::heuristic_failure;
    std::optional<Witness> cycle;
    std::uint64_t restarts_used = 0;
    bool hypotheses_ok = false; // delta >= (1/2+c)n and |F| <= 2cn held
};

/// Hamilton cycle containing every edge of the given linear forest, by
/// rotation-extension over forced-path segments with seeded restarts.
/// Forced edges are protected: rotations only ever break non-forest edges.
/// Falls back to exhaustive backtracking below the cap, so small instances
/// are deterministic. Every returned cycle is revalidated for containment
/// and Hamiltonicity before it is handed out.
HamiltonSearchResult hamilton_with_forest(const Graph& g, const Labeling& f,
                                          std::span<const EdgeId> forest, double c,
                                          std::uint64_t seed = 1, const SearchLimits& limits = {});

struct PathSearchOptions {
    std::optional<int> sign;      // restrict to edges with this label
    bool endpoints_in_set = false;
    bool alternating = false;     // edges leave the set, vertices alternate
};

struct PathSearchResult {
    Witness path;
    std::vector<VertexId> order; // vertex sequence of the path
    int guarantee = 0;           // nu*gamma*n/2 (nu*gamma*n when alternating)
    bool guarantee_met = false;
    bool hypotheses_ok = false;  // every set vertex had the required degree
};

/// Long path whose edges all touch the given vertex set: peel the incident
/// subgraph to its dense core and take a deep DFS branch. The alternating
/// variant restricts to edges with exactly one endpoint in the set.
/// Always returns the achieved path; the guarantee flag reports whether
/// the advertised length bound was reached.
PathSearchResult monochromatic_path(const Graph& g, const Labeling& f,
                                    const std::vector<VertexId>& set, double gamma,
                                    const PathSearchOptions& options = {});

/// Candidate filter for a companion edge (a, b) of a path vertex v.
using EdgeRequirement = std::function<bool(VertexId v, VertexId a, VertexId b)>;

namespace requirements {
/// Any edge spanned by the neighborhood of v.
EdgeRequirement in_neighborhood();
/// Edge with both endpoints among the sign-matching neighbors of v.
EdgeRequirement in_signed_neighborhood(const Graph& g, const Labeling& f, int sign);
/// Edge whose own label matches.
EdgeRequirement edge_sign(const Graph& g, const Labeling& f, int sign);
/// Triangle detour value g(v, vab) equals the given value.
EdgeRequirement g_value(const Graph& g, const Labeling& f, int value);
/// Triangle detour value differs from the given value.
EdgeRequirement g_value_not(const Graph& g, const Labeling& f, int value);
EdgeRequirement all_of(std::vector<EdgeRequirement> parts);
} // namespace requirements

/// Per-vertex companion edges for inserting a path into a Hamilton cycle,
/// plus the closing edge ab with a ~ x and b ~ y for the endpoints x, y.
struct InsertionPlan {
    std::vector<VertexId> path;     // ordered vertex sequence
    std::vector<EdgeId> companions; // aligned with path; both endpoints adjacent to the vertex
    std::optional<EdgeId> closing_edge;
    VertexId closing_a = -1; // adjacent to path.front()
    VertexId closing_b = -1; // adjacent to path.back()

    /// Companions plus the closing edge, deduplicated: the linear forest
    /// forced into the base cycle.
    std::vector<EdgeId> forest_edges() const;
};

struct CompanionRequest {
    std::vector<VertexId> path;
    std::vector<EdgeRequirement> requirement; // one per path vertex
    bool pick_closing = true;
};

struct CompanionPick {
    std::optional<InsertionPlan> plan;
    std::optional<VertexId> failed_vertex; // first vertex that ran out of candidates
};

/// Greedy pick with backtracking, deterministic under the seed. All picked
/// edges avoid the path's vertices and form a linear forest; a single-vertex
/// path reuses the closing edge as its companion.
CompanionPick pick_companion_edges(const Graph& g, const Labeling& f, const CompanionRequest& req,
                                   std::uint64_t seed = 1);

struct AmplifierResult {
    std::vector<EdgeId> base_edges; // Hamilton cycle of g - V(P), in g's edge ids
    int base_sum = 0;
    Witness whole_path; // H1: closing edge swapped for the entire path
    Witness one_by_one; // H2: each companion swapped for its vertex detour
    const Witness& chosen() const;
};

struct AmplifyOutcome {
    SearchStatus status = SearchStatus::heuristic_failure;
    std::optional<AmplifierResult> result;
    std::uint64_t restarts_used = 0;
};

/// The two-way path-insertion amplifier: base cycle through the plan's
/// forest in g - V(P), then either splice the whole path in place of the
/// closing edge or insert the vertices one by one through their companions.
AmplifyOutcome amplify(const Graph& g, const Labeling& f, const InsertionPlan& plan, double c,
                       std::uint64_t seed = 1, const SearchLimits& limits = {});

struct DenseSearchResult {
    Witness cycle;
    int achieved = 0; // |f(cycle)|
    std::vector<std::string> trace;
    bool used_exact_fallback = false;
    bool tight_example = false; // exact optimum is 0: every cycle balances
};

/// Dense-graph search: splits on the count of c/4-balanced vertices, tries
/// the positive-neighborhood cycle, the negative-path amplifier and the
/// unbalanced two-way insertion, and keeps the best validated cycle. Falls
/// back to the exact subset DP when everything fails or the best cycle is
/// weak and the instance is small enough.
DenseSearchResult search_dense(const Graph& g, const Labeling& f, double c,
                               std::uint64_t seed = 1, int exact_cap = 18);

struct MulticolorResult {
    SearchStatus status = SearchStatus::heuristic_failure;
    std::optional<Witness> cycle;
    int base_sum = 0; // f of the base cycle before the insertions
};

/// Multi-colored-vertex amplifier: each vertex of m_set gets two candidate
/// triangle companions with distinct g-values; both insertion sweeps (always
/// the larger g, always the smaller) are assembled and the better cycle wins,
/// so the result moves at least 2 per vertex away from one of the sweeps.
MulticolorResult multicolor_amplifier(const Graph& g, const Labeling& f,
                                      const std::vector<VertexId>& m_set, int tau, double c,
                                      std::uint64_t seed = 1, const SearchLimits& limits = {});

} // namespace graphdisc
