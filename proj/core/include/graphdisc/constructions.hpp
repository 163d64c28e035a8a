#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "graphdisc/family.hpp"
#include "graphdisc/graph.hpp"
#include "graphdisc/labeling.hpp"

namespace graphdisc {

struct LabeledGrid {
    Graph graph;
    Labeling labeling;
};

/// Two-region labeling of the k x k grid: the lower rows carry -1, the
/// upper rows +1, and the crossing verticals are balanced so that every
/// spanning tree satisfies |f(T)| <= k-1 (checkable via
/// spanning_tree_extremes). For odd k the lower region takes (k+1)/2 rows
/// and all crossing edges are positive; the row imbalance then plays the
/// role of the balanced crossing labels.
LabeledGrid half_grid_labeling(int k);

/// Two-block labeling of P_2 [] P_k: the left ceil(k/2) columns carry -1,
/// the rest +1; for odd k the vertical edge shared by the two blocks gets
/// +1. Every spanning tree satisfies |f(T)| <= 3.
LabeledGrid p2_strip_labeling(int k);

/// Vertex partition A, B, C with no edges between A and B and |A| <= |B|.
struct CutPartition {
    std::vector<VertexId> a;
    std::vector<VertexId> b;
    std::vector<VertexId> c;

    /// |B| - |A| + |C|, the spanning tree discrepancy this cut certifies.
    int bound() const {
        return static_cast<int>(b.size()) - static_cast<int>(a.size()) +
               static_cast<int>(c.size());
    }
    /// Throws std::invalid_argument on overlap, missing vertices, A-B edges
    /// or |A| > |B|.
    void validate(const Graph& g) const;
};

/// +1 on E(A) and E(A,C), -1 on E(B) and E(B,C), +1 on E(C); every spanning
/// tree then satisfies |f(T)| <= cut.bound().
Labeling cut_labeling(const Graph& g, const CutPartition& cut);

/// BFS-layer separator heuristic: scans layer cuts from a few sources and
/// keeps the partition with the smallest certified bound. Valid partition
/// always, no optimality guarantee.
CutPartition find_separator(const Graph& g);

/// Grid vertices split by incident signs: all edges positive, all
/// negative, or mixed.
struct SignClassification {
    std::vector<VertexId> all_positive;
    std::vector<VertexId> all_negative;
    std::vector<VertexId> mixed;
};
SignClassification grid_sign_classification(const Graph& g, const Labeling& f);

/// Two spanning trees that differ only on the attachment edges of the
/// mixed vertices inside the densest parity class X_{r,s}: T+ attaches them
/// with positive edges, T- with negative ones, so the sums differ by
/// exactly 2t.
struct ParityTreePair {
    Witness plus_tree;
    Witness minus_tree;
    int mixed_count = 0;             // t
    std::pair<int, int> parity_class; // (r, s)
};

/// nullopt when no parity class holds a mixed vertex (t = 0); callers fall
/// back to the exact inner maximization.
std::optional<ParityTreePair> parity_tree_pair(const Graph& g, const Labeling& f);

/// The four boustrophedon paths of a 2-row grid. X holds the majority-sign
/// vertical edges, Y the rest; each path walks left to right and switches
/// rows exactly at its designated vertical edges. The best of the four has
/// |f| >= k/2 where k is the column count.
struct StripePaths {
    Witness x_path;        // P(X), starts at the upper-left corner
    Witness x_path_mirror; // P'(X), starts at the lower-left corner
    Witness y_path;        // P(Y)
    Witness y_path_mirror; // P'(Y)
    int x_count = 0;
    int y_count = 0;
    bool swapped = false; // true when the negative verticals were the majority
    int columns = 0;

    const Witness& best() const;
};
StripePaths stripe_paths(const Graph& g, const Labeling& f);

/// Long-path construction for P_k [] P_l: cuts the grid into 2-row
/// stripes, keeps the majority-sign half of the stripes' best paths and
/// joins them along the boundary columns. The result is a simple path with
/// |f| > kl/8 - max(k,l)/8 - min(k,l).
Witness grid_long_path(const Graph& g, const Labeling& f);

/// Exhaustive minimum of the boundary of S over subsets of the k x k grid
/// with (k^2-k)/2 <= |S| <= (k^2+k)/2 (default range). The boundary is the
/// set of edges joining S to its complement; over this size range its
/// minimum is exactly k (a straight cut attains it). Exhaustive scan of
/// 2^(k^2) subsets; refuses k > 4.
struct BoundaryScan {
    int min_boundary = 0; // separating edges at the argmin
    std::vector<VertexId> argmin;
    int size_lo = 0;
    int size_hi = 0;
};
BoundaryScan boundary_min_scan(int k);
BoundaryScan boundary_min_scan(int k, int size_lo, int size_hi);

} // namespace graphdisc
