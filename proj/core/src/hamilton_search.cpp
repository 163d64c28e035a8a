#include "graphdisc/hamilton_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "graphdisc/errors.hpp"
#include "graphdisc/labeling.hpp"
#include "graphdisc/oracles.hpp"

namespace graphdisc {

namespace {

std::vector<EdgeId> sequence_edges(const Graph& g, const std::vector<VertexId>& seq, bool close) {
    std::vector<EdgeId> edges;
    edges.reserve(seq.size());
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        edges.push_back(*g.edge_between(seq[i], seq[i + 1]));
    if (close && seq.size() > 2) edges.push_back(*g.edge_between(seq.back(), seq.front()));
    return edges;
}

// Maximal forced paths of a linear forest, as oriented vertex sequences;
// untouched vertices become singleton segments.
std::vector<std::vector<VertexId>> forest_segments(const Graph& g, std::span<const EdgeId> forest) {
    std::vector<std::vector<VertexId>> adj(g.vertex_count());
    std::vector<char> touched(g.vertex_count(), 0);
    for (EdgeId e : forest) {
        auto [u, v] = g.edge(e);
        adj[u].push_back(v);
        adj[v].push_back(u);
        touched[u] = touched[v] = 1;
    }
    std::vector<std::vector<VertexId>> segments;
    std::vector<char> seen(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (seen[v]) continue;
        if (!touched[v]) {
            seen[v] = 1;
            segments.push_back({v});
            continue;
        }
        if (adj[v].size() != 1) continue; // walk starts at path endpoints
        std::vector<VertexId> seg{v};
        seen[v] = 1;
        VertexId prev = -1, cur = v;
        while (true) {
            VertexId next = -1;
            for (VertexId w : adj[cur])
                if (w != prev) next = w;
            if (next < 0) break;
            seg.push_back(next);
            seen[next] = 1;
            prev = cur;
            cur = next;
        }
        segments.push_back(std::move(seg));
    }
    return segments;
}

struct AdjacencyMatrix {
    int n;
    std::vector<char> cell;
    explicit AdjacencyMatrix(const Graph& g) : n(g.vertex_count()), cell(size_t(n) * n, 0) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            cell[size_t(u) * n + v] = cell[size_t(v) * n + u] = 1;
        }
    }
    bool operator()(VertexId u, VertexId v) const { return cell[size_t(u) * n + v]; }
};

// One rotation-extension attempt over oriented segments. Rotations break
// only inter-segment connections, so forced edges survive.
class SegmentSearch {
public:
    SegmentSearch(const AdjacencyMatrix& adj, const std::vector<std::vector<VertexId>>& segments,
                  std::mt19937_64& rng, std::uint64_t rotation_budget)
        : adj_(adj), segments_(segments), rng_(rng), rotation_budget_(rotation_budget) {}

    std::optional<std::vector<VertexId>> run() {
        const size_t total = segments_.size();
        std::vector<size_t> order(total);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng_);
        used_.assign(total, 0);
        path_.clear();
        path_.push_back(segments_[order[0]]);
        if (std::bernoulli_distribution(0.5)(rng_))
            std::reverse(path_[0].begin(), path_[0].end());
        used_[order[0]] = 1;
        size_t placed = 1;
        std::uint64_t rotations = 0;

        while (placed < total) {
            if (try_extend()) {
                ++placed;
                continue;
            }
            if (rotations++ >= rotation_budget_ || !rotate_random()) return std::nullopt;
        }
        while (!adj_(tail(), head())) {
            if (rotations++ >= rotation_budget_ || !rotate_random()) return std::nullopt;
        }
        std::vector<VertexId> cycle;
        for (const auto& seg : path_) cycle.insert(cycle.end(), seg.begin(), seg.end());
        return cycle;
    }

private:
    VertexId head() const { return path_.front().front(); }
    VertexId tail() const { return path_.back().back(); }

    bool try_extend() {
        VertexId t = tail();
        std::vector<size_t> candidates;
        for (size_t i = 0; i < segments_.size(); ++i) {
            if (used_[i]) continue;
            if (adj_(t, segments_[i].front()) || adj_(t, segments_[i].back()))
                candidates.push_back(i);
        }
        if (candidates.empty()) return false;
        size_t pick = candidates[std::uniform_int_distribution<size_t>(
            0, candidates.size() - 1)(rng_)];
        auto seg = segments_[pick];
        bool front_ok = adj_(t, seg.front());
        bool back_ok = adj_(t, seg.back());
        bool use_front = front_ok && (!back_ok || std::bernoulli_distribution(0.5)(rng_));
        if (!use_front) std::reverse(seg.begin(), seg.end());
        path_.push_back(std::move(seg));
        used_[pick] = 1;
        return true;
    }

    // Posa rotation at segment granularity: an edge from the tail to the
    // back of segment j-1 lets the suffix starting at j reverse in place,
    // breaking only the inter-segment connection.
    bool rotate_random() {
        VertexId t = tail();
        std::vector<size_t> cuts;
        for (size_t j = 1; j < path_.size(); ++j)
            if (adj_(t, path_[j - 1].back())) cuts.push_back(j);
        if (cuts.empty()) {
            // try the same from the head by flipping the whole path
            reverse_path();
            t = tail();
            for (size_t j = 1; j < path_.size(); ++j)
                if (adj_(t, path_[j - 1].back())) cuts.push_back(j);
            if (cuts.empty()) {
                reverse_path();
                return false;
            }
        }
        size_t j = cuts[std::uniform_int_distribution<size_t>(0, cuts.size() - 1)(rng_)];
        std::reverse(path_.begin() + j, path_.end());
        for (size_t i = j; i < path_.size(); ++i) std::reverse(path_[i].begin(), path_[i].end());
        return true;
    }

    void reverse_path() {
        std::reverse(path_.begin(), path_.end());
        for (auto& seg : path_) std::reverse(seg.begin(), seg.end());
    }

    const AdjacencyMatrix& adj_;
    const std::vector<std::vector<VertexId>>& segments_;
    std::mt19937_64& rng_;
    std::uint64_t rotation_budget_;
    std::vector<std::vector<VertexId>> path_;
    std::vector<char> used_;
};

// Deterministic backtracking fallback: Hamilton cycle through all forced
// edges, for instances below the exhaustive cap.
class ExhaustiveCycleSearch {
public:
    ExhaustiveCycleSearch(const Graph& g, std::span<const EdgeId> forest) : g_(g) {
        forced_partner_.resize(g.vertex_count());
        for (EdgeId e : forest) {
            auto [u, v] = g.edge(e);
            forced_partner_[u].push_back(v);
            forced_partner_[v].push_back(u);
        }
        sorted_adj_.resize(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            for (const auto& entry : g.neighbors(v)) sorted_adj_[v].push_back(entry.vertex);
            std::sort(sorted_adj_[v].begin(), sorted_adj_[v].end());
        }
    }

    std::optional<std::vector<VertexId>> run() {
        const int n = g_.vertex_count();
        if (n < 3) return std::nullopt;
        path_.assign(1, 0);
        on_path_.assign(n, 0);
        on_path_[0] = 1;
        if (extend()) return path_;
        return std::nullopt;
    }

private:
    bool forced_edge_used(VertexId u, VertexId v) const {
        // a forced edge is "used" once u and v are adjacent on the path
        for (size_t i = 0; i + 1 < path_.size(); ++i) {
            if ((path_[i] == u && path_[i + 1] == v) || (path_[i] == v && path_[i + 1] == u))
                return true;
        }
        return false;
    }

    bool extend() {
        const int n = g_.vertex_count();
        VertexId v = path_.back();
        if (static_cast<int>(path_.size()) == n) {
            if (!g_.edge_between(v, 0)) return false;
            // every forced edge must join cycle-consecutive vertices
            std::vector<int> pos(n);
            for (int i = 0; i < n; ++i) pos[path_[i]] = i;
            for (VertexId u = 0; u < n; ++u)
                for (VertexId w : forced_partner_[u]) {
                    if (u > w) continue;
                    int d = std::abs(pos[u] - pos[w]);
                    if (d != 1 && d != n - 1) return false;
                }
            return true;
        }
        // unused forced edges at v constrain the next step; v is interior
        // here, so a forced edge back onto the path can never be realized
        std::vector<VertexId> must;
        for (VertexId w : forced_partner_[v]) {
            if (forced_edge_used(v, w)) continue;
            if (on_path_[w]) {
                if (path_.size() == 1 && w == 0) continue; // impossible, kept for clarity
                return false;
            }
            must.push_back(w);
        }
        bool at_start = path_.size() == 1; // the start vertex also owns the closing slot
        const std::vector<VertexId>* candidates;
        if (must.size() > (at_start ? 2u : 1u)) return false;
        if (must.empty() || (at_start && must.size() == 1))
            candidates = &sorted_adj_[v];
        else
            candidates = &must;
        for (VertexId w : *candidates) {
            if (on_path_[w] || !g_.edge_between(v, w)) continue;
            on_path_[w] = 1;
            path_.push_back(w);
            if (extend()) return true;
            path_.pop_back();
            on_path_[w] = 0;
        }
        return false;
    }

    const Graph& g_;
    std::vector<std::vector<VertexId>> forced_partner_;
    std::vector<std::vector<VertexId>> sorted_adj_;

    std::vector<VertexId> path_;
    std::vector<char> on_path_;
};

} // namespace

HamiltonSearchResult hamilton_with_forest(const Graph& g, const Labeling& f,
                                          std::span<const EdgeId> forest, double c,
                                          std::uint64_t seed, const SearchLimits& limits) {
    HamiltonSearchResult out;
    if (!is_linear_forest(g, forest))
        throw std::invalid_argument("forced edge set is not a linear forest");
    const int n = g.vertex_count();
    int min_degree = n;
    for (VertexId v = 0; v < n; ++v) min_degree = std::min(min_degree, g.degree(v));
    out.hypotheses_ok = min_degree >= (0.5 + c) * n &&
                        static_cast<double>(forest.size()) <= 2.0 * c * n;

    auto finish = [&](const std::vector<VertexId>& cycle_order) {
        auto edges = sequence_edges(g, cycle_order, true);
        Witness w = make_witness(g, f, FamilyKind::hamilton_cycles, std::move(edges));
        for (EdgeId e : forest)
            if (!std::binary_search(w.edges.begin(), w.edges.end(), e))
                throw std::logic_error("forced edge missing from returned cycle");
        out.cycle = std::move(w);
        out.status = SearchStatus::ok;
    };

    if (n >= 3) {
        auto segments = forest_segments(g, forest);
        AdjacencyMatrix adj(g);
        std::mt19937_64 rng(seed);
        const std::uint64_t rotation_budget =
            limits.rotations_per_restart > 0 ? limits.rotations_per_restart
                                             : 8ull * static_cast<std::uint64_t>(n) + 32;
        for (std::uint64_t attempt = 0; attempt < limits.restarts; ++attempt) {
            out.restarts_used = attempt + 1;
            SegmentSearch search(adj, segments, rng, rotation_budget);
            if (auto cycle = search.run()) {
                finish(*cycle);
                return out;
            }
        }
        if (n <= limits.exhaustive_cap) {
            ExhaustiveCycleSearch exhaustive(g, forest);
            if (auto cycle = exhaustive.run()) {
                finish(*cycle);
                return out;
            }
            // exhaustive proof of absence
            out.status = out.hypotheses_ok ? SearchStatus::heuristic_failure
                                           : SearchStatus::precondition_violation;
            return out;
        }
    }
    out.status = out.hypotheses_ok ? SearchStatus::heuristic_failure
                                   : SearchStatus::precondition_violation;
    return out;
}

PathSearchResult monochromatic_path(const Graph& g, const Labeling& f,
                                    const std::vector<VertexId>& set, double gamma,
                                    const PathSearchOptions& options) {
    const int n = g.vertex_count();
    std::vector<char> in_set(n, 0);
    for (VertexId v : set) {
        g.check_vertex(v);
        in_set[v] = 1;
    }
    auto edge_admissible = [&](EdgeId e) {
        auto [u, v] = g.edge(e);
        bool touches = options.alternating ? (in_set[u] != in_set[v]) : (in_set[u] || in_set[v]);
        if (!touches) return false;
        if (options.sign && f.sign(e) != *options.sign) return false;
        return true;
    };

    std::vector<std::vector<Graph::AdjEntry>> adj(n);
    std::uint64_t edge_count = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!edge_admissible(e)) continue;
        auto [u, v] = g.edge(e);
        adj[u].push_back({v, e});
        adj[v].push_back({u, e});
        ++edge_count;
    }
    for (auto& list : adj)
        std::sort(list.begin(), list.end(),
                  [](const auto& a, const auto& b) { return a.vertex < b.vertex; });

    PathSearchResult out;
    const double nu = n > 0 ? static_cast<double>(set.size()) / n : 0.0;
    out.guarantee = static_cast<int>(
        std::floor(nu * gamma * n / (options.alternating ? 1.0 : 2.0)));

    // hypothesis check: every set vertex keeps gamma*n admissible degree
    out.hypotheses_ok = true;
    for (VertexId u : set)
        if (static_cast<double>(adj[u].size()) < gamma * n) {
            out.hypotheses_ok = false;
            break;
        }

    // peel to a subgraph of minimum degree >= floor(e/n); a DFS leaf there
    // has all neighbors among its ancestors
    int threshold = std::max<std::int64_t>(1, static_cast<std::int64_t>(edge_count) / std::max(1, n));
    std::vector<int> deg(n);
    for (VertexId v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<char> removed(n, 0);
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v)
        if (deg[v] < threshold) queue.push_back(v);
    while (!queue.empty()) {
        VertexId v = queue.back();
        queue.pop_back();
        if (removed[v]) continue;
        removed[v] = 1;
        for (const auto& entry : adj[v])
            if (!removed[entry.vertex] && --deg[entry.vertex] < threshold)
                queue.push_back(entry.vertex);
    }

    std::vector<VertexId> best_path;
    std::vector<char> visiting(n, 0);
    std::vector<VertexId> stack;
    // iterative DFS keeping the deepest root path seen
    std::function<void(VertexId)> dfs = [&](VertexId v) {
        visiting[v] = 1;
        stack.push_back(v);
        if (stack.size() > best_path.size()) best_path = stack;
        for (const auto& entry : adj[v]) {
            if (removed[entry.vertex] || visiting[entry.vertex]) continue;
            dfs(entry.vertex);
        }
        stack.pop_back();
        visiting[v] = 0;
    };
    VertexId core_start = -1;
    for (VertexId v = 0; v < n && core_start < 0; ++v)
        if (!removed[v] && !adj[v].empty()) core_start = v;
    if (core_start >= 0) dfs(core_start);

    // greedy extension at both ends
    if (!best_path.empty()) {
        std::vector<char> used(n, 0);
        for (VertexId v : best_path) used[v] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& entry : adj[best_path.back()])
                if (!used[entry.vertex]) {
                    best_path.push_back(entry.vertex);
                    used[entry.vertex] = 1;
                    grew = true;
                    break;
                }
            for (const auto& entry : adj[best_path.front()])
                if (!used[entry.vertex]) {
                    best_path.insert(best_path.begin(), entry.vertex);
                    used[entry.vertex] = 1;
                    grew = true;
                    break;
                }
        }
    }

    if (options.endpoints_in_set && best_path.size() >= 2) {
        if (!in_set[best_path.front()]) best_path.erase(best_path.begin());
        if (best_path.size() >= 2 && !in_set[best_path.back()]) best_path.pop_back();
    }
    if (best_path.size() < 2) {
        best_path.clear();
        if (n > 0) best_path.push_back(set.empty() ? 0 : set.front());
    }

    out.order = best_path;
    std::vector<EdgeId> edges;
    for (size_t i = 0; i + 1 < best_path.size(); ++i)
        edges.push_back(*g.edge_between(best_path[i], best_path[i + 1]));
    out.path = make_witness(g, f, FamilyKind::paths, std::move(edges));
    out.guarantee_met = static_cast<int>(best_path.size()) - 1 >= out.guarantee;
    return out;
}

namespace requirements {

EdgeRequirement in_neighborhood() {
    return [](VertexId, VertexId, VertexId) { return true; }; // adjacency enforced by the picker
}

EdgeRequirement in_signed_neighborhood(const Graph& g, const Labeling& f, int sign) {
    return [&g, &f, sign](VertexId v, VertexId a, VertexId b) {
        auto va = g.edge_between(v, a);
        auto vb = g.edge_between(v, b);
        return va && vb && f.sign(*va) == sign && f.sign(*vb) == sign;
    };
}

EdgeRequirement edge_sign(const Graph& g, const Labeling& f, int sign) {
    return [&g, &f, sign](VertexId, VertexId a, VertexId b) {
        auto ab = g.edge_between(a, b);
        return ab && f.sign(*ab) == sign;
    };
}

EdgeRequirement g_value(const Graph& g, const Labeling& f, int value) {
    return [&g, &f, value](VertexId v, VertexId a, VertexId b) {
        auto va = g.edge_between(v, a);
        auto vb = g.edge_between(v, b);
        auto ab = g.edge_between(a, b);
        if (!va || !vb || !ab) return false;
        return f.sign(*va) + f.sign(*vb) - f.sign(*ab) == value;
    };
}

EdgeRequirement g_value_not(const Graph& g, const Labeling& f, int value) {
    return [&g, &f, value](VertexId v, VertexId a, VertexId b) {
        auto va = g.edge_between(v, a);
        auto vb = g.edge_between(v, b);
        auto ab = g.edge_between(a, b);
        if (!va || !vb || !ab) return false;
        return f.sign(*va) + f.sign(*vb) - f.sign(*ab) != value;
    };
}

EdgeRequirement all_of(std::vector<EdgeRequirement> parts) {
    return [parts = std::move(parts)](VertexId v, VertexId a, VertexId b) {
        for (const auto& p : parts)
            if (!p(v, a, b)) return false;
        return true;
    };
}

} // namespace requirements

std::vector<EdgeId> InsertionPlan::forest_edges() const {
    std::set<EdgeId> edges(companions.begin(), companions.end());
    if (closing_edge) edges.insert(*closing_edge);
    return {edges.begin(), edges.end()};
}

namespace {

// Linear-forest bookkeeping over the picked edges.
struct ForestState {
    std::vector<int> degree;
    std::vector<VertexId> parent;
    explicit ForestState(int n) : degree(n, 0), parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    VertexId find(VertexId v) const {
        while (parent[v] != v) v = parent[v];
        return v;
    }
    bool can_add(VertexId a, VertexId b) const {
        return degree[a] < 2 && degree[b] < 2 && find(a) != find(b);
    }
    void add(VertexId a, VertexId b) {
        ++degree[a];
        ++degree[b];
        parent[find(a)] = find(b);
    }
};

} // namespace

CompanionPick pick_companion_edges(const Graph& g, const Labeling& f, const CompanionRequest& req,
                                   std::uint64_t seed) {
    if (req.path.empty()) throw std::invalid_argument("companion picking needs a path");
    if (req.requirement.size() != req.path.size())
        throw std::invalid_argument("one requirement per path vertex expected");
    (void)f;
    const int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    for (VertexId v : req.path) {
        g.check_vertex(v);
        on_path[v] = 1;
    }
    std::mt19937_64 rng(seed);

    const bool single_vertex_closing = req.pick_closing && req.path.size() == 1;
    const VertexId x = req.path.front();
    const VertexId y = req.path.back();

    // candidate lists per slot: path vertices first, closing edge last
    const size_t slots = req.path.size() + (req.pick_closing && !single_vertex_closing ? 1 : 0);
    std::vector<std::vector<EdgeId>> candidates(slots);
    for (size_t i = 0; i < req.path.size(); ++i) {
        VertexId v = req.path[i];
        for (const auto& entry : g.neighbors(v)) {
            VertexId a = entry.vertex;
            if (on_path[a]) continue;
            for (const auto& second : g.neighbors(v)) {
                VertexId b = second.vertex;
                if (b <= a || on_path[b]) continue;
                auto ab = g.edge_between(a, b);
                if (!ab) continue;
                if (!req.requirement[i](v, a, b)) continue;
                // for a single-vertex path the companion doubles as the
                // closing edge; a ~ x and b ~ x hold by construction
                candidates[i].push_back(*ab);
            }
        }
        std::sort(candidates[i].begin(), candidates[i].end());
        candidates[i].erase(std::unique(candidates[i].begin(), candidates[i].end()),
                            candidates[i].end());
        std::shuffle(candidates[i].begin(), candidates[i].end(), rng);
    }
    if (req.pick_closing && !single_vertex_closing) {
        auto& closing = candidates.back();
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edge(e);
            if (on_path[a] || on_path[b]) continue;
            bool forward = g.adjacent(a, x) && g.adjacent(b, y);
            bool backward = g.adjacent(b, x) && g.adjacent(a, y);
            if (forward || backward) closing.push_back(e);
        }
        std::shuffle(closing.begin(), closing.end(), rng);
    }

    std::vector<EdgeId> picked(slots, -1);
    std::vector<char> edge_used(g.edge_count(), 0);
    size_t deepest = 0;

    std::function<bool(size_t, const ForestState&)> assign = [&](size_t slot,
                                                                 const ForestState& state) {
        if (slot == slots) return true;
        deepest = std::max(deepest, slot);
        for (EdgeId e : candidates[slot]) {
            if (edge_used[e]) continue;
            auto [a, b] = g.edge(e);
            if (!state.can_add(a, b)) continue;
            ForestState next = state;
            next.add(a, b);
            edge_used[e] = 1;
            picked[slot] = e;
            if (assign(slot + 1, next)) return true;
            edge_used[e] = 0;
            picked[slot] = -1;
        }
        return false;
    };

    CompanionPick out;
    if (!assign(0, ForestState(n))) {
        out.failed_vertex = deepest < req.path.size() ? req.path[deepest] : req.path.back();
        return out;
    }

    InsertionPlan plan;
    plan.path = req.path;
    plan.companions.assign(picked.begin(), picked.begin() + req.path.size());
    if (req.pick_closing) {
        EdgeId closing = single_vertex_closing ? picked[0] : picked.back();
        plan.closing_edge = closing;
        auto [a, b] = g.edge(closing);
        if (g.adjacent(a, x) && g.adjacent(b, y)) {
            plan.closing_a = a;
            plan.closing_b = b;
        } else {
            plan.closing_a = b;
            plan.closing_b = a;
        }
    }
    out.plan = std::move(plan);
    return out;
}

const Witness& AmplifierResult::chosen() const {
    return std::abs(whole_path.sum) >= std::abs(one_by_one.sum) ? whole_path : one_by_one;
}

AmplifyOutcome amplify(const Graph& g, const Labeling& f, const InsertionPlan& plan, double c,
                       std::uint64_t seed, const SearchLimits& limits) {
    AmplifyOutcome out;
    if (!plan.closing_edge) throw std::invalid_argument("amplifier needs a closing edge");
    if (plan.companions.size() != plan.path.size())
        throw std::invalid_argument("amplifier needs one companion per path vertex");

    std::vector<char> on_path(g.vertex_count(), 0);
    for (VertexId v : plan.path) on_path[v] = 1;
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!on_path[v]) keep.push_back(v);

    auto sub = induced_subgraph(g, keep);
    Labeling sub_f = restrict_labeling(f, sub.edge_to_parent);
    std::vector<int> edge_to_sub(g.edge_count(), -1);
    for (size_t e = 0; e < sub.edge_to_parent.size(); ++e)
        edge_to_sub[sub.edge_to_parent[e]] = static_cast<int>(e);

    std::vector<EdgeId> sub_forest;
    for (EdgeId e : plan.forest_edges()) {
        if (edge_to_sub[e] < 0)
            throw std::invalid_argument("plan edge touches the path vertices");
        sub_forest.push_back(edge_to_sub[e]);
    }

    auto hs = hamilton_with_forest(sub.graph, sub_f, sub_forest, c, seed, limits);
    out.status = hs.status;
    out.restarts_used = hs.restarts_used;
    if (!hs.cycle) return out;

    std::set<EdgeId> base;
    for (EdgeId e : hs.cycle->edges) base.insert(sub.edge_to_parent[e]);

    AmplifierResult result;
    result.base_edges.assign(base.begin(), base.end());
    result.base_sum = subgraph_sum(f, result.base_edges);

    // H1: splice the whole path in place of the closing edge
    std::set<EdgeId> h1 = base;
    h1.erase(*plan.closing_edge);
    h1.insert(*g.edge_between(plan.closing_a, plan.path.front()));
    h1.insert(*g.edge_between(plan.path.back(), plan.closing_b));
    for (size_t i = 0; i + 1 < plan.path.size(); ++i)
        h1.insert(*g.edge_between(plan.path[i], plan.path[i + 1]));

    // H2: insert each vertex through its companion edge
    std::set<EdgeId> h2 = base;
    for (size_t i = 0; i < plan.path.size(); ++i) {
        auto [a, b] = g.edge(plan.companions[i]);
        h2.erase(plan.companions[i]);
        h2.insert(*g.edge_between(a, plan.path[i]));
        h2.insert(*g.edge_between(plan.path[i], b));
    }

    result.whole_path = make_witness(g, f, FamilyKind::hamilton_cycles,
                                     std::vector<EdgeId>(h1.begin(), h1.end()));
    result.one_by_one = make_witness(g, f, FamilyKind::hamilton_cycles,
                                     std::vector<EdgeId>(h2.begin(), h2.end()));
    out.result = std::move(result);
    return out;
}

namespace {

// Insert leftover vertices into a cycle one at a time, each between the
// consecutive cycle pair maximizing the label gain.
std::optional<std::vector<VertexId>> insert_remaining(const Graph& g, const Labeling& f,
                                                      std::vector<VertexId> cycle,
                                                      std::vector<VertexId> rest) {
    std::sort(rest.begin(), rest.end());
    for (VertexId u : rest) {
        int best_gain = std::numeric_limits<int>::min();
        size_t best_pos = 0;
        for (size_t i = 0; i < cycle.size(); ++i) {
            VertexId p = cycle[i];
            VertexId q = cycle[(i + 1) % cycle.size()];
            auto pu = g.edge_between(p, u);
            auto uq = g.edge_between(u, q);
            if (!pu || !uq) continue;
            int gain = f.sign(*pu) + f.sign(*uq) - f.sign(*g.edge_between(p, q));
            if (gain > best_gain) {
                best_gain = gain;
                best_pos = i + 1;
            }
        }
        if (best_gain == std::numeric_limits<int>::min()) return std::nullopt;
        cycle.insert(cycle.begin() + best_pos, u);
    }
    return cycle;
}

struct DenseCandidate {
    Witness cycle;
    std::string note;
};

// Case 1 first branch: a vertex whose neighborhood has few locally
// negative vertices hosts an all-positive cycle; everything else is
// inserted greedily.
std::optional<DenseCandidate> positive_neighborhood_branch(const Graph& g, const Labeling& f,
                                                           double c, std::uint64_t seed) {
    const int n = g.vertex_count();
    for (VertexId v = 0; v < n; ++v) {
        std::vector<char> in_nbhd(n, 0);
        for (const auto& entry : g.neighbors(v)) in_nbhd[entry.vertex] = 1;
        std::vector<VertexId> region;
        for (const auto& entry : g.neighbors(v)) {
            VertexId u = entry.vertex;
            int negative_inside = 0;
            for (const auto& e2 : g.neighbors(u))
                if (in_nbhd[e2.vertex] && f.sign(e2.edge) < 0) ++negative_inside;
            if (negative_inside <= c * n) region.push_back(u);
        }
        if (g.degree(v) - static_cast<int>(region.size()) >= c * n / 2) continue;
        if (region.size() < 3) continue;

        // positive subgraph induced on the region
        std::vector<int> to_sub(n, -1);
        for (size_t i = 0; i < region.size(); ++i) to_sub[region[i]] = static_cast<int>(i);
        std::vector<std::pair<VertexId, VertexId>> pos_edges;
        std::vector<EdgeId> sub_edge_to_parent;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (f.sign(e) < 0) continue;
            auto [a, b] = g.edge(e);
            if (to_sub[a] < 0 || to_sub[b] < 0) continue;
            pos_edges.emplace_back(to_sub[a], to_sub[b]);
            sub_edge_to_parent.push_back(e);
        }
        Graph sub = Graph::from_edges(static_cast<int>(region.size()), pos_edges);
        Labeling sub_f = restrict_labeling(f, sub_edge_to_parent);
        auto hs = hamilton_with_forest(sub, sub_f, {}, c, seed);
        if (!hs.cycle) continue;

        // recover the cycle as a vertex order in g
        std::vector<VertexId> order;
        {
            std::vector<std::vector<VertexId>> adj(sub.vertex_count());
            for (EdgeId e : hs.cycle->edges) {
                auto [a, b] = sub.edge(e);
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            VertexId prev = -1, cur = 0;
            do {
                order.push_back(region[cur]);
                VertexId next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = next;
            } while (cur != 0);
        }
        std::vector<VertexId> rest;
        std::vector<char> in_cycle(n, 0);
        for (VertexId u : order) in_cycle[u] = 1;
        for (VertexId u = 0; u < n; ++u)
            if (!in_cycle[u]) rest.push_back(u);
        auto full = insert_remaining(g, f, order, rest);
        if (!full) continue;
        auto edges = sequence_edges(g, *full, true);
        return DenseCandidate{make_witness(g, f, FamilyKind::hamilton_cycles, std::move(edges)),
                              "case1/positive-neighborhood around vertex " + std::to_string(v)};
    }
    return std::nullopt;
}

// Case 1 second branch: monochromatic path through the majority balanced
// side, then the two-way insertion amplifier.
std::optional<DenseCandidate> balanced_path_branch(const Graph& g, const Labeling& f, double a,
                                                   double c, const BalanceClass& balance,
                                                   std::uint64_t seed) {
    const int n = g.vertex_count();
    int positive_side = 0, negative_side = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (balance.tags[v] != BalanceTag::balanced) continue;
        (positive_degree(g, f, v) >= negative_degree(g, f, v) ? positive_side : negative_side) +=
            1;
    }
    // majority side has more positive neighbors; otherwise run on -f
    const bool negate = negative_side > positive_side;
    const Labeling work = negate ? f.negated() : f;

    std::vector<VertexId> side;
    for (VertexId v = 0; v < n; ++v)
        if (balance.tags[v] == BalanceTag::balanced &&
            positive_degree(g, work, v) >= negative_degree(g, work, v))
            side.push_back(v);
    if (side.empty()) return std::nullopt;

    PathSearchOptions opts;
    opts.sign = -1;
    opts.endpoints_in_set = true;
    auto path_result = monochromatic_path(g, work, side, a, opts);
    std::vector<VertexId> path_order = path_result.order;
    if (path_order.size() < 2) return std::nullopt;
    // keep the removal small so g - V(P) stays dense
    size_t max_len = std::max<size_t>(2, n / 6);
    if (path_order.size() > max_len) path_order.resize(max_len);
    std::vector<char> in_side(n, 0);
    for (VertexId v : side) in_side[v] = 1;
    while (path_order.size() >= 2 && !in_side[path_order.back()]) path_order.pop_back();
    if (path_order.size() < 2) return std::nullopt;

    CompanionRequest req;
    req.path = path_order;
    for (VertexId v : path_order) {
        if (in_side[v])
            req.requirement.push_back(requirements::in_signed_neighborhood(g, work, 1));
        else
            req.requirement.push_back(requirements::edge_sign(g, work, -1));
    }
    auto pick = pick_companion_edges(g, work, req, seed);
    if (!pick.plan) return std::nullopt;
    auto amp = amplify(g, work, *pick.plan, c, seed);
    if (!amp.result) return std::nullopt;
    const Witness& best = amp.result->chosen();
    // rebuild under the original labeling (edges are what matters)
    Witness rebuilt = make_witness(g, f, FamilyKind::hamilton_cycles, best.edges);
    return DenseCandidate{std::move(rebuilt),
                          std::string("case1/negative-path amplifier") +
                              (negate ? " (negated labels)" : "") + ", |P| = " +
                              std::to_string(path_order.size())};
}

// Case 2: unbalanced vertices inserted two ways through a cycle of g - T.
std::optional<DenseCandidate> unbalanced_branch(const Graph& g, const Labeling& f, double a,
                                                double c, const BalanceClass& balance,
                                                std::uint64_t seed) {
    const int n = g.vertex_count();
    std::vector<VertexId> mostly_positive, mostly_negative;
    for (VertexId v = 0; v < n; ++v) {
        if (balance.tags[v] == BalanceTag::balanced) continue;
        if (negative_degree(g, f, v) < std::ceil(a * n)) mostly_positive.push_back(v);
        else if (positive_degree(g, f, v) < std::ceil(a * n)) mostly_negative.push_back(v);
    }
    const bool negate = mostly_negative.size() > mostly_positive.size();
    const Labeling work = negate ? f.negated() : f;
    std::vector<VertexId> t_set = negate ? mostly_negative : mostly_positive;
    if (t_set.empty()) return std::nullopt;
    size_t cap = std::max<size_t>(1, static_cast<size_t>(std::ceil(c * n)));
    if (t_set.size() > cap) t_set.resize(cap);

    std::vector<char> in_t(n, 0);
    for (VertexId v : t_set) in_t[v] = 1;

    // base cycle of g to harvest companion edges from
    auto base = hamilton_with_forest(g, work, {}, c, seed);
    if (!base.cycle) return std::nullopt;

    std::set<EdgeId> cycle_edges(base.cycle->edges.begin(), base.cycle->edges.end());
    struct PickPair {
        EdgeId positive, negative;
    };
    std::vector<PickPair> picks;
    std::set<EdgeId> used;
    for (VertexId v : t_set) {
        PickPair pair{-1, -1};
        for (EdgeId e : cycle_edges) {
            if (used.count(e)) continue;
            auto [p, q] = g.edge(e);
            if (in_t[p] || in_t[q]) continue;
            auto vp = g.edge_between(v, p);
            auto vq = g.edge_between(v, q);
            if (!vp || !vq || work.sign(*vp) != 1 || work.sign(*vq) != 1) continue;
            if (work.sign(e) > 0 && pair.positive < 0) pair.positive = e;
            if (work.sign(e) < 0 && pair.negative < 0) pair.negative = e;
            if (pair.positive >= 0 && pair.negative >= 0) break;
        }
        if (pair.positive < 0 || pair.negative < 0) return std::nullopt;
        used.insert(pair.positive);
        used.insert(pair.negative);
        picks.push_back(pair);
    }

    // the picked edges sit on one cycle, so they form a linear forest in g - T
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < n; ++v)
        if (!in_t[v]) keep.push_back(v);
    auto sub = induced_subgraph(g, keep);
    std::vector<int> edge_to_sub(g.edge_count(), -1);
    for (size_t e = 0; e < sub.edge_to_parent.size(); ++e)
        edge_to_sub[sub.edge_to_parent[e]] = static_cast<int>(e);
    std::vector<EdgeId> sub_forest;
    for (const auto& pair : picks) {
        sub_forest.push_back(edge_to_sub[pair.positive]);
        sub_forest.push_back(edge_to_sub[pair.negative]);
    }
    Labeling sub_f = restrict_labeling(work, sub.edge_to_parent);
    auto hs = hamilton_with_forest(sub.graph, sub_f, sub_forest, c, seed);
    if (!hs.cycle) return std::nullopt;

    std::set<EdgeId> host;
    for (EdgeId e : hs.cycle->edges) host.insert(sub.edge_to_parent[e]);

    auto build = [&](bool remove_negative) {
        std::set<EdgeId> edges = host;
        for (size_t i = 0; i < t_set.size(); ++i) {
            EdgeId remove = remove_negative ? picks[i].negative : picks[i].positive;
            auto [p, q] = g.edge(remove);
            edges.erase(remove);
            edges.insert(*g.edge_between(p, t_set[i]));
            edges.insert(*g.edge_between(t_set[i], q));
        }
        return make_witness(g, f, FamilyKind::hamilton_cycles,
                            std::vector<EdgeId>(edges.begin(), edges.end()));
    };
    Witness via_negative = build(true);
    Witness via_positive = build(false);
    Witness& best = std::abs(via_negative.sum) >= std::abs(via_positive.sum) ? via_negative
                                                                             : via_positive;
    return DenseCandidate{std::move(best),
                          std::string("case2/unbalanced two-way insertion, |T| = ") +
                              std::to_string(t_set.size()) +
                              (negate ? " (negated labels)" : "")};
}

} // namespace

DenseSearchResult search_dense(const Graph& g, const Labeling& f, double c, std::uint64_t seed,
                               int exact_cap) {
    // canonicalize on the majority sign: |f(H)| is negation invariant, and
    // running on the positive-majority side makes the search itself
    // sign-equivariant
    int negatives = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) negatives += f.sign(e) < 0;
    if (2 * negatives > g.edge_count()) {
        DenseSearchResult flipped = search_dense(g, f.negated(), c, seed, exact_cap);
        flipped.cycle = make_witness(g, f, FamilyKind::hamilton_cycles, flipped.cycle.edges);
        flipped.trace.insert(flipped.trace.begin(), "negative majority: searching -f");
        return flipped;
    }

    const int n = g.vertex_count();
    const double a = c / 4.0;
    BalanceClass balance = classify_balance(g, f, a);

    DenseSearchResult out;
    std::optional<Witness> best;
    auto consider = [&](std::optional<DenseCandidate> cand) {
        if (!cand) return;
        out.trace.push_back(cand->note + " -> |f| = " + std::to_string(std::abs(cand->cycle.sum)));
        if (!best || std::abs(cand->cycle.sum) > std::abs(best->sum)) best = cand->cycle;
    };

    const int balanced = balance.balanced_count();
    const bool case1 = balanced >= std::ceil((0.75 + c) * n);
    out.trace.push_back(std::string("a-balanced vertices: ") + std::to_string(balanced) + "/" +
                        std::to_string(n) + " -> " + (case1 ? "case 1" : "case 2"));

    if (case1) {
        consider(positive_neighborhood_branch(g, f, c, seed));
        consider(balanced_path_branch(g, f, a, c, balance, seed));
    } else {
        consider(unbalanced_branch(g, f, a, c, balance, seed));
        consider(balanced_path_branch(g, f, a, c, balance, seed));
    }

    if (!best) {
        auto plain = hamilton_with_forest(g, f, {}, c, seed);
        if (plain.cycle) {
            out.trace.push_back("fallback/plain cycle -> |f| = " +
                                std::to_string(std::abs(plain.cycle->sum)));
            best = std::move(plain.cycle);
        }
    }

    const bool weak = !best || best->sum == 0;
    if (weak && n <= exact_cap) {
        auto exact = hamilton_extremes(g, f, exact_cap);
        if (exact.max_cycle) {
            out.used_exact_fallback = true;
            Witness pick = std::abs(exact.max_cycle->sum) >= std::abs(exact.min_cycle->sum)
                               ? *exact.max_cycle
                               : *exact.min_cycle;
            out.trace.push_back("fallback/exact subset DP -> |f| = " +
                                std::to_string(std::abs(pick.sum)));
            if (!best || std::abs(pick.sum) > std::abs(best->sum)) best = std::move(pick);
            out.tight_example = std::abs(exact.max_cycle->sum) == 0 &&
                                std::abs(exact.min_cycle->sum) == 0;
            if (out.tight_example) out.trace.push_back("every Hamilton cycle balances exactly");
        }
    }
    if (!best) throw empty_family_error("no Hamilton cycle found in the dense search");
    out.cycle = std::move(*best);
    out.achieved = std::abs(out.cycle.sum);
    return out;
}

MulticolorResult multicolor_amplifier(const Graph& g, const Labeling& f,
                                      const std::vector<VertexId>& m_set, int tau, double c,
                                      std::uint64_t seed, const SearchLimits& limits) {
    MulticolorResult out;
    if (m_set.empty()) {
        auto hs = hamilton_with_forest(g, f, {}, c, seed, limits);
        out.status = hs.status;
        if (hs.cycle) {
            out.base_sum = hs.cycle->sum;
            out.cycle = std::move(hs.cycle);
        }
        return out;
    }
    ColorSet colors = color_vertices(g, f, tau);
    for (VertexId x : m_set)
        if (colors.color_count(x) < 2)
            throw std::invalid_argument("vertex " + std::to_string(x) +
                                        " is not multi-colored at tau = " + std::to_string(tau));

    std::vector<char> in_m(g.vertex_count(), 0);
    for (VertexId x : m_set) in_m[x] = 1;

    std::mt19937_64 rng(seed);
    struct XPick {
        EdgeId first, second;
        int g_first, g_second;
    };
    std::vector<XPick> picks;
    ForestState state(g.vertex_count());
    std::vector<char> edge_used(g.edge_count(), 0);
    for (VertexId x : m_set) {
        // all candidate companion edges spanned by N(x), away from M
        std::vector<std::pair<EdgeId, int>> cands;
        auto nbrs = g.neighbors(x);
        for (size_t i = 0; i < nbrs.size(); ++i) {
            if (in_m[nbrs[i].vertex]) continue;
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                if (in_m[nbrs[j].vertex]) continue;
                auto ab = g.edge_between(nbrs[i].vertex, nbrs[j].vertex);
                if (!ab) continue;
                int value = f.sign(nbrs[i].edge) + f.sign(nbrs[j].edge) - f.sign(*ab);
                cands.emplace_back(*ab, value);
            }
        }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        std::shuffle(cands.begin(), cands.end(), rng);
        bool found = false;
        for (size_t i = 0; i < cands.size() && !found; ++i) {
            auto [e1, g1] = cands[i];
            if (edge_used[e1]) continue;
            auto [a1, b1] = g.edge(e1);
            if (!state.can_add(a1, b1)) continue;
            ForestState with_first = state;
            with_first.add(a1, b1);
            for (size_t j = 0; j < cands.size(); ++j) {
                auto [e2, g2] = cands[j];
                if (e2 == e1 || edge_used[e2] || g2 == g1) continue;
                auto [a2, b2] = g.edge(e2);
                if (!with_first.can_add(a2, b2)) continue;
                state = with_first;
                state.add(a2, b2);
                edge_used[e1] = edge_used[e2] = 1;
                picks.push_back({e1, e2, g1, g2});
                found = true;
                break;
            }
        }
        if (!found) {
            out.status = SearchStatus::heuristic_failure;
            return out;
        }
    }

    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!in_m[v]) keep.push_back(v);
    auto sub = induced_subgraph(g, keep);
    std::vector<int> edge_to_sub(g.edge_count(), -1);
    for (size_t e = 0; e < sub.edge_to_parent.size(); ++e)
        edge_to_sub[sub.edge_to_parent[e]] = static_cast<int>(e);
    std::vector<EdgeId> sub_forest;
    for (const auto& p : picks) {
        sub_forest.push_back(edge_to_sub[p.first]);
        sub_forest.push_back(edge_to_sub[p.second]);
    }
    Labeling sub_f = restrict_labeling(f, sub.edge_to_parent);
    auto hs = hamilton_with_forest(sub.graph, sub_f, sub_forest, c, seed, limits);
    out.status = hs.status;
    if (!hs.cycle) return out;

    std::set<EdgeId> base;
    for (EdgeId e : hs.cycle->edges) base.insert(sub.edge_to_parent[e]);
    out.base_sum = subgraph_sum(f, std::vector<EdgeId>(base.begin(), base.end()));

    // two full sweeps (always the larger g, always the smaller) plus a
    // greedy refinement; the better assembly wins
    auto assemble = [&](const std::function<bool(const XPick&, int)>& take_first) {
        std::set<EdgeId> edges = base;
        int running = out.base_sum;
        for (size_t i = 0; i < m_set.size(); ++i) {
            const XPick& p = picks[i];
            bool first = take_first(p, running);
            EdgeId remove = first ? p.first : p.second;
            running += first ? p.g_first : p.g_second;
            auto [aa, bb] = g.edge(remove);
            edges.erase(remove);
            edges.insert(*g.edge_between(aa, m_set[i]));
            edges.insert(*g.edge_between(m_set[i], bb));
        }
        return make_witness(g, f, FamilyKind::hamilton_cycles,
                            std::vector<EdgeId>(edges.begin(), edges.end()));
    };
    Witness up = assemble([](const XPick& p, int) { return p.g_first >= p.g_second; });
    Witness down = assemble([](const XPick& p, int) { return p.g_first < p.g_second; });
    Witness greedy = assemble([](const XPick& p, int running) {
        return std::abs(running + p.g_first) >= std::abs(running + p.g_second);
    });
    Witness* best = &up;
    if (std::abs(down.sum) > std::abs(best->sum)) best = &down;
    if (std::abs(greedy.sum) > std::abs(best->sum)) best = &greedy;
    out.cycle = std::move(*best);
    out.status = SearchStatus::ok;
    return out;
}

} // namespace graphdisc
