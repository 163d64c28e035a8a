#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "graphdisc/family.hpp"
#include "graphdisc/graph.hpp"
#include "graphdisc/labeling.hpp"

namespace graphdisc {

/// Instance caps for the exact oracles. The exponential oracles refuse
/// larger instances instead of silently approximating.
struct OracleCaps {
    int hamilton = 18; // subset DP over vertex bitmasks
    int tree = 12;     // connected-subset sweep for the family of all trees
    int path = 18;     // (subset, endpoint) DP for the family of all paths
};

/// Extremal-sum spanning trees. f(T) is a linear edge-weight objective, so
/// a greedy extremal-weight tree is exact (matroid optimality); this is the
/// O(m alpha) inner oracle the labeling sweep relies on.
struct TreeExtremes {
    Witness max_tree;
    Witness min_tree;
};
TreeExtremes spanning_tree_extremes(const Graph& g, const Labeling& f);

/// Value-only variant: (max f(T), min f(T)).
std::pair<int, int> spanning_tree_extreme_values(const Graph& g, const Labeling& f);

/// Extremal-sum Hamilton cycles by subset DP; both witnesses absent iff the
/// graph is not Hamiltonian. Throws oracle_limit_error above the cap.
struct CycleExtremes {
    std::optional<Witness> max_cycle;
    std::optional<Witness> min_cycle;
};
CycleExtremes hamilton_extremes(const Graph& g, const Labeling& f, int cap = OracleCaps{}.hamilton);
std::optional<std::pair<int, int>> hamilton_extreme_values(const Graph& g, const Labeling& f,
                                                           int cap = OracleCaps{}.hamilton);

/// Same contract with free path endpoints.
struct HamiltonPathExtremes {
    std::optional<Witness> max_path;
    std::optional<Witness> min_path;
};
HamiltonPathExtremes hamilton_path_extremes(const Graph& g, const Labeling& f,
                                            int cap = OracleCaps{}.hamilton);
std::optional<std::pair<int, int>> hamilton_path_extreme_values(const Graph& g, const Labeling& f,
                                                                int cap = OracleCaps{}.hamilton);

/// Maximizes |f(T)| over all subtrees (single vertices count with sum 0).
/// Exact via a sweep over connected vertex subsets, each solved by an
/// extremal-weight spanning tree of the induced subgraph.
Witness tree_max_abs(const Graph& g, const Labeling& f, int cap = OracleCaps{}.tree);
int tree_max_abs_value(const Graph& g, const Labeling& f, int cap = OracleCaps{}.tree);

/// Maximizes |f(P)| over all simple paths (single vertices count with
/// sum 0) by DP over (vertex subset, endpoint) states.
Witness path_max_abs(const Graph& g, const Labeling& f, int cap = OracleCaps{}.path);
int path_max_abs_value(const Graph& g, const Labeling& f, int cap = OracleCaps{}.path);

struct EnumerationCaps {
    std::uint64_t max_members = 50'000'000;
};

/// Streams every family member exactly once (members with at least one
/// edge; the single-vertex members of T and P are implicit). The callback
/// may return false to stop early. Returns the number of members streamed;
/// throws oracle_limit_error when the cap is hit.
std::uint64_t enumerate_family(const Graph& g, FamilyKind kind,
                               const std::function<bool(std::span<const EdgeId>)>& visit,
                               const EnumerationCaps& caps = {});

/// Count-only convenience.
std::uint64_t count_family(const Graph& g, FamilyKind kind, const EnumerationCaps& caps = {});

/// Enumeration-backed extremes: max and min of f(A) over the family, or
/// nullopt when the family has no member with an edge. The slow cross-check
/// oracle for the fast extremes above.
std::optional<std::pair<int, int>> enumerated_extremes(const Graph& g, const Labeling& f,
                                                       FamilyKind kind,
                                                       const EnumerationCaps& caps = {});

} // namespace graphdisc
