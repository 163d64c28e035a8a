#include "graphdisc/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "graphdisc/errors.hpp"

namespace graphdisc {

namespace {

struct UnionFind {
    std::vector<VertexId> parent;
    explicit UnionFind(int n) : parent(n) { reset(); }
    void reset() { std::iota(parent.begin(), parent.end(), 0); }
    VertexId find(VertexId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    bool unite(VertexId a, VertexId b) {
        VertexId ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
        return true;
    }
};

// Greedy extremal-weight spanning tree: edges of the preferred sign first.
// Exact by matroid exchange. Returns used edges; tree spans iff the graph
// is connected.
std::vector<EdgeId> greedy_tree(const Graph& g, const Labeling& f, int preferred_sign,
                                UnionFind& uf) {
    uf.reset();
    std::vector<EdgeId> tree;
    tree.reserve(std::max(0, g.vertex_count() - 1));
    for (int pass = 0; pass < 2; ++pass) {
        int want = pass == 0 ? preferred_sign : -preferred_sign;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (f.sign(e) != want) continue;
            auto [u, v] = g.edge(e);
            if (uf.unite(u, v)) tree.push_back(e);
        }
    }
    return tree;
}

void require_connected(const Graph& g) {
    if (!g.connected())
        throw empty_family_error("graph is disconnected: no spanning tree exists");
}

constexpr std::int32_t kNegInf = std::numeric_limits<std::int32_t>::min() / 4;
constexpr std::int32_t kPosInf = std::numeric_limits<std::int32_t>::max() / 4;

// Shared state for the subset DPs: dense weight matrix and adjacency masks.
struct DpInstance {
    int n;
    std::vector<std::int8_t> weight; // n*n, 0 when no edge
    std::vector<std::uint32_t> adj;  // adjacency bitmask per vertex

    DpInstance(const Graph& g, const Labeling& f) : n(g.vertex_count()) {
        weight.assign(static_cast<size_t>(n) * n, 0);
        adj.assign(n, 0);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            weight[static_cast<size_t>(u) * n + v] = static_cast<std::int8_t>(f.sign(e));
            weight[static_cast<size_t>(v) * n + u] = static_cast<std::int8_t>(f.sign(e));
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
    }
    int w(int u, int v) const { return weight[static_cast<size_t>(u) * n + v]; }
    bool has_edge(int u, int v) const { return adj[u] >> v & 1; }
};

// dp tables indexed by mask * n + v. `maximize` selects the direction.
class SubsetDp {
public:
    SubsetDp(const DpInstance& inst, bool maximize, bool cycles)
        : inst_(inst), maximize_(maximize), cycles_(cycles) {
        const size_t states = (size_t{1} << inst_.n) * inst_.n;
        dp_.assign(states, maximize_ ? kNegInf : kPosInf);
        run();
    }

    std::int32_t at(std::uint32_t mask, int v) const {
        return dp_[static_cast<size_t>(mask) * inst_.n + v];
    }
    bool reachable(std::uint32_t mask, int v) const {
        return at(mask, v) != (maximize_ ? kNegInf : kPosInf);
    }

    // Reconstructs the vertex sequence of a path realizing dp[mask][v].
    std::vector<int> walk_back(std::uint32_t mask, int v) const {
        std::vector<int> seq{v};
        while (std::popcount(mask) > 1) {
            std::uint32_t rest = mask & ~(1u << v);
            bool found = false;
            for (std::uint32_t bits = rest; bits; bits &= bits - 1) {
                int u = std::countr_zero(bits);
                if (!inst_.has_edge(u, v)) continue;
                if (!dpvalid(rest, u)) continue;
                if (at(rest, u) + inst_.w(u, v) == at(mask, v)) {
                    seq.push_back(u);
                    mask = rest;
                    v = u;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("subset DP reconstruction failed");
        }
        std::reverse(seq.begin(), seq.end());
        return seq;
    }

private:
    bool dpvalid(std::uint32_t mask, int v) const { return reachable(mask, v); }

    void run() {
        const int n = inst_.n;
        auto store = [&](std::uint32_t mask, int v, std::int32_t value) {
            auto& slot = dp_[static_cast<size_t>(mask) * n + v];
            if (maximize_ ? value > slot : value < slot) slot = value;
        };
        if (cycles_) {
            store(1u << 0, 0, 0); // paths pinned to start at vertex 0
        } else {
            for (int v = 0; v < n; ++v) store(1u << v, v, 0);
        }
        const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            if (cycles_ && !(mask & 1)) continue;
            for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
                int v = std::countr_zero(bits);
                std::int32_t cur = at(mask, v);
                if (cur == (maximize_ ? kNegInf : kPosInf)) continue;
                std::uint32_t ext = inst_.adj[v] & ~mask;
                for (std::uint32_t e = ext; e; e &= e - 1) {
                    int w = std::countr_zero(e);
                    store(mask | (1u << w), w, cur + inst_.w(v, w));
                }
            }
        }
    }

    const DpInstance& inst_;
    bool maximize_;
    bool cycles_;
    std::vector<std::int32_t> dp_;
};

std::vector<EdgeId> sequence_edges(const Graph& g, const std::vector<int>& seq, bool close) {
    std::vector<EdgeId> edges;
    edges.reserve(seq.size());
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        edges.push_back(*g.edge_between(seq[i], seq[i + 1]));
    if (close && seq.size() > 1) edges.push_back(*g.edge_between(seq.back(), seq.front()));
    return edges;
}

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.vertex_count() > cap)
        throw oracle_limit_error(std::string(what) + ": instance has " +
                                 std::to_string(g.vertex_count()) + " vertices, cap is " +
                                 std::to_string(cap));
}

} // namespace

TreeExtremes spanning_tree_extremes(const Graph& g, const Labeling& f) {
    require_connected(g);
    UnionFind uf(g.vertex_count());
    auto max_edges = greedy_tree(g, f, 1, uf);
    auto min_edges = greedy_tree(g, f, -1, uf);
    return TreeExtremes{
        make_witness(g, f, FamilyKind::spanning_trees, std::move(max_edges)),
        make_witness(g, f, FamilyKind::spanning_trees, std::move(min_edges)),
    };
}

std::pair<int, int> spanning_tree_extreme_values(const Graph& g, const Labeling& f) {
    require_connected(g);
    const int tree_edges = g.vertex_count() - 1;
    UnionFind uf(g.vertex_count());
    int pos_used = 0;
    uf.reset();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (f.sign(e) < 0) continue;
        auto [u, v] = g.edge(e);
        if (uf.unite(u, v)) ++pos_used;
    }
    int neg_used = 0;
    uf.reset();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (f.sign(e) > 0) continue;
        auto [u, v] = g.edge(e);
        if (uf.unite(u, v)) ++neg_used;
    }
    return {2 * pos_used - tree_edges, tree_edges - 2 * neg_used};
}

namespace {

// Shared driver for the Hamilton cycle extremes; found=false when the graph
// is not Hamiltonian. Witness construction is skipped in value-only mode.
struct HamiltonResult {
    bool found = false;
    int max_value = 0;
    int min_value = 0;
    std::optional<Witness> max_witness;
    std::optional<Witness> min_witness;
};

HamiltonResult hamilton_cycles_dp(const Graph& g, const Labeling& f, int cap, bool witnesses) {
    check_cap(g, cap, "hamilton cycle oracle");
    HamiltonResult out;
    const int n = g.vertex_count();
    if (n < 3) return out;
    DpInstance inst(g, f);
    const std::uint32_t full = (1u << n) - 1;

    SubsetDp hi(inst, true, true);
    SubsetDp lo(inst, false, true);
    int best_hi = kNegInf, best_lo = kPosInf;
    int arg_hi = -1, arg_lo = -1;
    for (int v = 1; v < n; ++v) {
        if (!inst.has_edge(0, v)) continue;
        if (hi.reachable(full, v) && hi.at(full, v) + inst.w(v, 0) > best_hi) {
            best_hi = hi.at(full, v) + inst.w(v, 0);
            arg_hi = v;
        }
        if (lo.reachable(full, v) && lo.at(full, v) + inst.w(v, 0) < best_lo) {
            best_lo = lo.at(full, v) + inst.w(v, 0);
            arg_lo = v;
        }
    }
    if (arg_hi < 0) return out;
    out.found = true;
    out.max_value = best_hi;
    out.min_value = best_lo;
    if (witnesses) {
        out.max_witness = make_witness(g, f, FamilyKind::hamilton_cycles,
                                       sequence_edges(g, hi.walk_back(full, arg_hi), true));
        out.min_witness = make_witness(g, f, FamilyKind::hamilton_cycles,
                                       sequence_edges(g, lo.walk_back(full, arg_lo), true));
    }
    return out;
}

struct PathDpResult {
    bool spanning_found = false;
    int span_max = 0, span_min = 0;
    std::optional<Witness> span_max_witness, span_min_witness;
    int abs_best = 0; // best |f(P)| over all simple paths (0 = single vertex)
    std::optional<Witness> abs_witness;
};

PathDpResult path_dp(const Graph& g, const Labeling& f, int cap, bool witnesses,
                     bool want_spanning, bool want_abs) {
    check_cap(g, cap, "path oracle");
    PathDpResult out;
    const int n = g.vertex_count();
    if (n == 0) return out;
    if (n == 1) {
        out.spanning_found = true;
        if (witnesses) {
            if (want_spanning) {
                out.span_max_witness = make_witness(g, f, FamilyKind::hamilton_paths, {});
                out.span_min_witness = out.span_max_witness;
            }
            if (want_abs) out.abs_witness = make_witness(g, f, FamilyKind::paths, {});
        }
        return out;
    }
    DpInstance inst(g, f);
    const std::uint32_t full = (1u << n) - 1;
    SubsetDp hi(inst, true, false);
    SubsetDp lo(inst, false, false);

    int span_hi = kNegInf, span_lo = kPosInf;
    std::pair<std::uint32_t, int> span_hi_arg{0, -1}, span_lo_arg{0, -1};
    int abs_best = 0;
    std::pair<std::uint32_t, int> abs_arg{0, -1};
    bool abs_from_hi = true;

    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
            int v = std::countr_zero(bits);
            if (hi.reachable(mask, v)) {
                int value = hi.at(mask, v);
                if (mask == full && value > span_hi) {
                    span_hi = value;
                    span_hi_arg = {mask, v};
                }
                if (want_abs && value > abs_best) {
                    abs_best = value;
                    abs_arg = {mask, v};
                    abs_from_hi = true;
                }
            }
            if (lo.reachable(mask, v)) {
                int value = lo.at(mask, v);
                if (mask == full && value < span_lo) {
                    span_lo = value;
                    span_lo_arg = {mask, v};
                }
                if (want_abs && -value > abs_best) {
                    abs_best = -value;
                    abs_arg = {mask, v};
                    abs_from_hi = false;
                }
            }
        }
        if (!want_abs && mask != full) continue;
    }
    if (span_hi_arg.second >= 0) {
        out.spanning_found = true;
        out.span_max = span_hi;
        out.span_min = span_lo;
        if (witnesses && want_spanning) {
            out.span_max_witness =
                make_witness(g, f, FamilyKind::hamilton_paths,
                             sequence_edges(g, hi.walk_back(full, span_hi_arg.second), false));
            out.span_min_witness =
                make_witness(g, f, FamilyKind::hamilton_paths,
                             sequence_edges(g, lo.walk_back(full, span_lo_arg.second), false));
        }
    }
    out.abs_best = abs_best;
    if (witnesses && want_abs) {
        if (abs_arg.second < 0) {
            out.abs_witness = make_witness(g, f, FamilyKind::paths, {});
        } else {
            const auto& dir = abs_from_hi ? hi : lo;
            out.abs_witness =
                make_witness(g, f, FamilyKind::paths,
                             sequence_edges(g, dir.walk_back(abs_arg.first, abs_arg.second), false));
        }
    }
    return out;
}

} // namespace

CycleExtremes hamilton_extremes(const Graph& g, const Labeling& f, int cap) {
    auto r = hamilton_cycles_dp(g, f, cap, true);
    return CycleExtremes{std::move(r.max_witness), std::move(r.min_witness)};
}

std::optional<std::pair<int, int>> hamilton_extreme_values(const Graph& g, const Labeling& f,
                                                           int cap) {
    auto r = hamilton_cycles_dp(g, f, cap, false);
    if (!r.found) return std::nullopt;
    return std::make_pair(r.max_value, r.min_value);
}

HamiltonPathExtremes hamilton_path_extremes(const Graph& g, const Labeling& f, int cap) {
    auto r = path_dp(g, f, cap, true, true, false);
    return HamiltonPathExtremes{std::move(r.span_max_witness), std::move(r.span_min_witness)};
}

std::optional<std::pair<int, int>> hamilton_path_extreme_values(const Graph& g, const Labeling& f,
                                                                int cap) {
    auto r = path_dp(g, f, cap, false, true, false);
    if (!r.spanning_found) return std::nullopt;
    return std::make_pair(r.span_max, r.span_min);
}

Witness path_max_abs(const Graph& g, const Labeling& f, int cap) {
    auto r = path_dp(g, f, cap, true, false, true);
    return std::move(*r.abs_witness);
}

int path_max_abs_value(const Graph& g, const Labeling& f, int cap) {
    return path_dp(g, f, cap, false, false, true).abs_best;
}

namespace {

struct TreeSweepResult {
    int best_abs = 0;
    std::uint32_t best_mask = 0; // 0 encodes the single-vertex member
    int best_sign = 1;           // +1: max tree attains, -1: min tree
};

TreeSweepResult tree_subset_sweep(const Graph& g, const Labeling& f, int cap) {
    check_cap(g, cap, "tree oracle");
    const int n = g.vertex_count();
    TreeSweepResult out;
    if (n == 0) return out;
    std::vector<std::uint32_t> adj(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    UnionFind uf(n);
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < 2) continue;
        // connectivity of the induced subgraph via bit BFS
        std::uint32_t reach = mask & (~mask + 1);
        for (;;) {
            std::uint32_t grow = reach;
            for (std::uint32_t bits = reach; bits; bits &= bits - 1)
                grow |= adj[std::countr_zero(bits)] & mask;
            if (grow == reach) break;
            reach = grow;
        }
        if (reach != mask) continue;
        const int size = std::popcount(mask);
        int pos_used = 0, neg_used = 0;
        uf.reset();
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (f.sign(e) < 0) continue;
            auto [u, v] = g.edge(e);
            if ((mask >> u & 1) && (mask >> v & 1) && uf.unite(u, v)) ++pos_used;
        }
        uf.reset();
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (f.sign(e) > 0) continue;
            auto [u, v] = g.edge(e);
            if ((mask >> u & 1) && (mask >> v & 1) && uf.unite(u, v)) ++neg_used;
        }
        int max_sum = 2 * pos_used - (size - 1);
        int min_sum = (size - 1) - 2 * neg_used;
        if (max_sum > out.best_abs) {
            out.best_abs = max_sum;
            out.best_mask = mask;
            out.best_sign = 1;
        }
        if (-min_sum > out.best_abs) {
            out.best_abs = -min_sum;
            out.best_mask = mask;
            out.best_sign = -1;
        }
    }
    return out;
}

} // namespace

Witness tree_max_abs(const Graph& g, const Labeling& f, int cap) {
    auto sweep = tree_subset_sweep(g, f, cap);
    if (sweep.best_mask == 0) return make_witness(g, f, FamilyKind::trees, {});
    // rebuild the extremal tree on the winning vertex subset
    UnionFind uf(g.vertex_count());
    std::vector<EdgeId> tree;
    for (int pass = 0; pass < 2; ++pass) {
        int want = pass == 0 ? sweep.best_sign : -sweep.best_sign;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (f.sign(e) != want) continue;
            auto [u, v] = g.edge(e);
            if (!(sweep.best_mask >> u & 1) || !(sweep.best_mask >> v & 1)) continue;
            if (uf.unite(u, v)) tree.push_back(e);
        }
    }
    return make_witness(g, f, FamilyKind::trees, std::move(tree));
}

int tree_max_abs_value(const Graph& g, const Labeling& f, int cap) {
    return tree_subset_sweep(g, f, cap).best_abs;
}

namespace {

class MemberCounter {
public:
    MemberCounter(const std::function<bool(std::span<const EdgeId>)>& visit,
                  const EnumerationCaps& caps)
        : visit_(visit), caps_(caps) {}

    bool emit(std::span<const EdgeId> member) {
        if (++count_ > caps_.max_members)
            throw oracle_limit_error("family enumeration exceeded cap of " +
                                     std::to_string(caps_.max_members) + " members");
        return !visit_ || visit_(member);
    }
    std::uint64_t count() const { return count_; }

private:
    const std::function<bool(std::span<const EdgeId>)>& visit_;
    const EnumerationCaps& caps_;
    std::uint64_t count_ = 0;
};

// Union-find with rollback for the in/out spanning tree recursion.
class RollbackUf {
public:
    explicit RollbackUf(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    VertexId find(VertexId v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }
    bool unite(VertexId a, VertexId b) {
        VertexId ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (size_[ra] > size_[rb]) std::swap(ra, rb);
        parent_[ra] = rb;
        size_[rb] += size_[ra];
        trail_.push_back(ra);
        return true;
    }
    size_t mark() const { return trail_.size(); }
    void rollback(size_t mark) {
        while (trail_.size() > mark) {
            VertexId child = trail_.back();
            trail_.pop_back();
            size_[parent_[child]] -= size_[child];
            parent_[child] = child;
        }
    }

private:
    std::vector<VertexId> parent_;
    std::vector<int> size_;
    std::vector<VertexId> trail_;
};

class SpanningTreeEnum {
public:
    SpanningTreeEnum(const Graph& g, MemberCounter& out) : g_(g), out_(out), uf_(g.vertex_count()) {}

    bool run() {
        const int n = g_.vertex_count();
        if (n == 1) return out_.emit({});
        if (!g_.connected()) return true;
        chosen_.reserve(n - 1);
        return recurse(0);
    }

private:
    // chosen forest + edges >= i must still connect the graph
    bool rest_connects(EdgeId i) {
        RollbackUf probe(g_.vertex_count());
        int unions = 0;
        for (EdgeId e : chosen_) {
            auto [u, v] = g_.edge(e);
            if (probe.unite(u, v)) ++unions;
        }
        for (EdgeId e = i; e < g_.edge_count(); ++e) {
            auto [u, v] = g_.edge(e);
            if (probe.unite(u, v)) ++unions;
        }
        return unions == g_.vertex_count() - 1;
    }

    bool recurse(EdgeId i) {
        const int need = g_.vertex_count() - 1;
        if (static_cast<int>(chosen_.size()) == need) return out_.emit(chosen_);
        if (i == g_.edge_count()) return true;
        auto [u, v] = g_.edge(i);
        if (uf_.find(u) != uf_.find(v)) {
            size_t mark = uf_.mark();
            uf_.unite(u, v);
            chosen_.push_back(i);
            bool keep = recurse(i + 1);
            chosen_.pop_back();
            uf_.rollback(mark);
            if (!keep) return false;
        }
        // exclude branch, only if the remaining edges can still span
        if (rest_connects(i + 1)) {
            if (!recurse(i + 1)) return false;
        }
        return true;
    }

    const Graph& g_;
    MemberCounter& out_;
    RollbackUf uf_;
    std::vector<EdgeId> chosen_;
};

class HamiltonEnum {
public:
    HamiltonEnum(const Graph& g, MemberCounter& out, bool cycles)
        : g_(g), out_(out), cycles_(cycles) {
        sorted_adj_.resize(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            sorted_adj_[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
            std::sort(sorted_adj_[v].begin(), sorted_adj_[v].end(),
                      [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
        }
    }

    bool run() {
        const int n = g_.vertex_count();
        used_.assign(n, 0);
        if (cycles_) {
            if (n < 3) return true;
            path_ = {0};
            used_[0] = 1;
            return extend();
        }
        if (n == 1) return out_.emit({});
        for (VertexId s = 0; s < n; ++s) {
            path_ = {s};
            std::fill(used_.begin(), used_.end(), 0);
            used_[s] = 1;
            if (!extend()) return false;
        }
        return true;
    }

private:
    bool extend() {
        const int n = g_.vertex_count();
        if (static_cast<int>(path_.size()) == n) {
            if (cycles_) {
                auto closing = g_.edge_between(path_.back(), 0);
                // one orientation per cycle
                if (closing && path_[1] < path_.back()) {
                    edges_.push_back(*closing);
                    std::vector<EdgeId> member(edges_);
                    std::sort(member.begin(), member.end());
                    bool keep = out_.emit(member);
                    edges_.pop_back();
                    return keep;
                }
                return true;
            }
            if (path_.front() < path_.back()) { // one orientation per path
                std::vector<EdgeId> member(edges_);
                std::sort(member.begin(), member.end());
                return out_.emit(member);
            }
            return true;
        }
        for (const auto& entry : sorted_adj_[path_.back()]) {
            if (used_[entry.vertex]) continue;
            used_[entry.vertex] = 1;
            path_.push_back(entry.vertex);
            edges_.push_back(entry.edge);
            bool keep = extend();
            edges_.pop_back();
            path_.pop_back();
            used_[entry.vertex] = 0;
            if (!keep) return false;
        }
        return true;
    }

    const Graph& g_;
    MemberCounter& out_;
    bool cycles_;
    std::vector<std::vector<Graph::AdjEntry>> sorted_adj_;
    std::vector<VertexId> path_;
    std::vector<EdgeId> edges_;
    std::vector<char> used_;
};

// All subtrees with at least one edge, each exactly once: the minimum
// vertex of the tree is the recursion root, and frontier edges are decided
// in/out in a fixed order.
class SubtreeEnum {
public:
    SubtreeEnum(const Graph& g, MemberCounter& out) : g_(g), out_(out) {}

    bool run() {
        const int n = g_.vertex_count();
        in_tree_.assign(n, 0);
        for (VertexId r = 0; r < n; ++r) {
            root_ = r;
            in_tree_[r] = 1;
            cand_.clear();
            for (const auto& entry : g_.neighbors(r))
                if (entry.vertex > r) cand_.push_back(entry);
            std::sort(cand_.begin(), cand_.end(),
                      [](const auto& a, const auto& b) { return a.edge < b.edge; });
            bool keep = recurse(0);
            in_tree_[r] = 0;
            if (!keep) return false;
        }
        return true;
    }

private:
    bool recurse(size_t index) {
        if (index == cand_.size()) {
            if (chosen_.empty()) return true;
            std::vector<EdgeId> member(chosen_);
            std::sort(member.begin(), member.end());
            return out_.emit(member);
        }
        auto entry = cand_[index];
        if (in_tree_[entry.vertex]) return recurse(index + 1); // would close a cycle
        if (!recurse(index + 1)) return false;                 // exclude
        in_tree_[entry.vertex] = 1;
        chosen_.push_back(entry.edge);
        size_t old_size = cand_.size();
        for (const auto& next : g_.neighbors(entry.vertex))
            if (next.vertex > root_ && next.edge != entry.edge) cand_.push_back(next);
        bool keep = recurse(index + 1);
        cand_.resize(old_size);
        chosen_.pop_back();
        in_tree_[entry.vertex] = 0;
        return keep;
    }

    const Graph& g_;
    MemberCounter& out_;
    VertexId root_ = 0;
    std::vector<Graph::AdjEntry> cand_;
    std::vector<EdgeId> chosen_;
    std::vector<char> in_tree_;
};

// All simple paths with at least one edge; reported once with the smaller
// endpoint first.
class PathEnum {
public:
    PathEnum(const Graph& g, MemberCounter& out) : g_(g), out_(out) {}

    bool run() {
        used_.assign(g_.vertex_count(), 0);
        for (VertexId s = 0; s < g_.vertex_count(); ++s) {
            start_ = s;
            used_[s] = 1;
            bool keep = extend(s);
            used_[s] = 0;
            if (!keep) return false;
        }
        return true;
    }

private:
    bool extend(VertexId v) {
        for (const auto& entry : g_.neighbors(v)) {
            if (used_[entry.vertex]) continue;
            used_[entry.vertex] = 1;
            edges_.push_back(entry.edge);
            bool keep = true;
            if (start_ < entry.vertex) {
                std::vector<EdgeId> member(edges_);
                std::sort(member.begin(), member.end());
                keep = out_.emit(member);
            }
            if (keep) keep = extend(entry.vertex);
            edges_.pop_back();
            used_[entry.vertex] = 0;
            if (!keep) return false;
        }
        return true;
    }

    const Graph& g_;
    MemberCounter& out_;
    VertexId start_ = 0;
    std::vector<EdgeId> edges_;
    std::vector<char> used_;
};

} // namespace

std::uint64_t enumerate_family(const Graph& g, FamilyKind kind,
                               const std::function<bool(std::span<const EdgeId>)>& visit,
                               const EnumerationCaps& caps) {
    MemberCounter out(visit, caps);
    switch (kind) {
        case FamilyKind::spanning_trees: SpanningTreeEnum(g, out).run(); break;
        case FamilyKind::hamilton_cycles: HamiltonEnum(g, out, true).run(); break;
        case FamilyKind::hamilton_paths: HamiltonEnum(g, out, false).run(); break;
        case FamilyKind::trees: SubtreeEnum(g, out).run(); break;
        case FamilyKind::paths: PathEnum(g, out).run(); break;
    }
    return out.count();
}

std::uint64_t count_family(const Graph& g, FamilyKind kind, const EnumerationCaps& caps) {
    return enumerate_family(g, kind, {}, caps);
}

std::optional<std::pair<int, int>> enumerated_extremes(const Graph& g, const Labeling& f,
                                                       FamilyKind kind,
                                                       const EnumerationCaps& caps) {
    bool any = false;
    int max_sum = 0, min_sum = 0;
    enumerate_family(
        g, kind,
        [&](std::span<const EdgeId> member) {
            int sum = subgraph_sum(f, member);
            if (!any) {
                max_sum = min_sum = sum;
                any = true;
            } else {
                max_sum = std::max(max_sum, sum);
                min_sum = std::min(min_sum, sum);
            }
            return true;
        },
        caps);
    if (!any) return std::nullopt;
    return std::make_pair(max_sum, min_sum);
}

} // namespace graphdisc
