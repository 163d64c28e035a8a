#pragma once

#include <span>
#include <string>
#include <vector>

#include "graphdisc/graph.hpp"
#include "graphdisc/labeling.hpp"

namespace graphdisc {

/// The five subgraph families. Trees and paths include all non-spanning
/// members; a single vertex is a member with label sum 0 and is encoded by
/// the empty edge set.
enum class FamilyKind : int {
    spanning_trees,  // T_n
    hamilton_cycles, // H
    hamilton_paths,  // P_n
    trees,           // T
    paths,           // P
};

/// Short family codes used on the command line: tn, h, pn, t, p.
std::string family_code(FamilyKind kind);
FamilyKind parse_family(const std::string& code);
std::string family_name(FamilyKind kind);

/// True iff the edge set is a valid member of the family in g.
bool is_family_member(const Graph& g, FamilyKind kind, std::span<const EdgeId> edges);

/// A concrete family member together with its label sum. Construction
/// revalidates membership and recomputes the sum, so a Witness in hand is
/// always a checked certificate.
struct Witness {
    FamilyKind kind{};
    std::vector<EdgeId> edges; // sorted
    int sum = 0;

    std::string to_json() const;
};

Witness make_witness(const Graph& g, const Labeling& f, FamilyKind kind,
                     std::vector<EdgeId> edges);

} // namespace graphdisc
