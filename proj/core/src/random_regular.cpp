#include "graphdisc/random_regular.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "graphdisc/errors.hpp"
#include "graphdisc/oracles.hpp"

namespace graphdisc {

RandomRegularSample random_regular(int n, int d, std::uint64_t seed,
                                   std::uint64_t max_attempts) {
    if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");
    if ((static_cast<std::int64_t>(n) * d) % 2 != 0)
        throw std::invalid_argument("n*d must be even (half-edges pair up)");
    if (d >= n) throw std::invalid_argument("simple d-regular graph needs d < n");

    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<size_t>(n) * d);
    for (size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<int>(i) / d;

    for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<std::pair<VertexId, VertexId>> edges;
        edges.reserve(stubs.size() / 2);
        std::set<std::pair<VertexId, VertexId>> seen;
        bool simple = true;
        for (size_t i = 0; i < stubs.size(); i += 2) {
            VertexId u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                simple = false;
                break;
            }
            auto key = std::minmax(u, v);
            if (!seen.insert(key).second) {
                simple = false;
                break;
            }
            edges.emplace_back(u, v);
        }
        if (!simple) continue;
        return RandomRegularSample{Graph::from_edges(n, edges), attempt};
    }
    throw sampling_error("configuration model rejected every draw (n = " + std::to_string(n) +
                             ", d = " + std::to_string(d) + ", attempts = " +
                             std::to_string(max_attempts) + ")",
                         max_attempts);
}

ComponentStats positive_component_stats(const Graph& g, const Labeling& f) {
    ComponentStats out;
    int negatives = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (f.sign(e) < 0) ++negatives;
    out.negated = negatives > g.edge_count() - negatives;
    const int wanted = out.negated ? -1 : 1; // sign of the "positive" subgraph
    out.negative_edges = out.negated ? g.edge_count() - negatives : negatives;
    out.positive_edges = g.edge_count() - out.negative_edges;

    auto comps = components(g, [&](EdgeId e) { return f.sign(e) == wanted; });
    out.component_count = comps.size();
    for (const auto& comp : comps) {
        ++out.size_histogram[static_cast<int>(comp.size())];
        if (comp.size() == 1) ++out.isolated_vertices;
    }
    return out;
}

GreedyTreeResult positive_greedy_tree(const Graph& g, const Labeling& f) {
    if (!g.connected())
        throw empty_family_error("graph is disconnected: no spanning tree exists");
    auto extremes = spanning_tree_extremes(g, f);
    GreedyTreeResult out;
    out.tree = std::move(extremes.max_tree);
    for (EdgeId e : out.tree.edges)
        if (f.sign(e) < 0) ++out.negative_edges_used;
    auto comps = components(g, [&](EdgeId e) { return f.sign(e) > 0; });
    out.positive_components = comps.size();
    out.certified_sum = g.vertex_count() - 1 - 2 * (static_cast<int>(comps.size()) - 1);
    return out;
}

namespace {

int boundary_size(const Graph& g, const std::vector<char>& in_set) {
    std::vector<char> seen(g.vertex_count(), 0);
    int count = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!in_set[v]) continue;
        for (const auto& entry : g.neighbors(v))
            if (!in_set[entry.vertex] && !seen[entry.vertex]) {
                seen[entry.vertex] = 1;
                ++count;
            }
    }
    return count;
}

std::uint64_t subsets_up_to(int n, int k) {
    // sum of C(n, 1..k), saturating
    std::uint64_t total = 0;
    std::uint64_t binom = 1;
    for (int i = 1; i <= k; ++i) {
        binom = binom * static_cast<std::uint64_t>(n - i + 1) / i;
        if (binom > (std::uint64_t{1} << 62) || total > (std::uint64_t{1} << 62))
            return std::uint64_t{1} << 62;
        total += binom;
    }
    return total;
}

} // namespace

IsoperimetryResult isoperimetry_scan(const Graph& g, int max_size, std::uint64_t subset_budget,
                                     std::uint64_t seed) {
    const int n = g.vertex_count();
    max_size = std::min(max_size, n);
    if (max_size < 1) throw std::invalid_argument("subset size cap must be positive");
    IsoperimetryResult out;
    out.ratio = std::numeric_limits<double>::infinity();

    std::vector<char> in_set(n, 0);
    auto consider = [&](const std::vector<VertexId>& subset) {
        std::fill(in_set.begin(), in_set.end(), 0);
        for (VertexId v : subset) in_set[v] = 1;
        double ratio = static_cast<double>(boundary_size(g, in_set)) / subset.size();
        if (ratio < out.ratio) {
            out.ratio = ratio;
            out.argmin = subset;
        }
    };

    if (subsets_up_to(n, max_size) <= subset_budget) {
        // lexicographic scan of all subsets of size 1..max_size
        std::vector<VertexId> subset;
        std::function<void(VertexId)> rec = [&](VertexId next) {
            if (!subset.empty()) consider(subset);
            if (static_cast<int>(subset.size()) == max_size) return;
            for (VertexId v = next; v < n; ++v) {
                subset.push_back(v);
                rec(v + 1);
                subset.pop_back();
            }
        };
        rec(0);
        return out;
    }

    // seeded greedy growth from random starts: an upper bound on the scan
    out.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<VertexId> pick(0, n - 1);
    const int restarts = 64;
    for (int r = 0; r < restarts; ++r) {
        std::vector<VertexId> subset{pick(rng)};
        std::fill(in_set.begin(), in_set.end(), 0);
        in_set[subset[0]] = 1;
        consider(subset);
        while (static_cast<int>(subset.size()) < max_size) {
            // grow by the boundary vertex that shrinks the next boundary most
            VertexId best = -1;
            int best_boundary = std::numeric_limits<int>::max();
            std::set<VertexId> boundary;
            for (VertexId v : subset)
                for (const auto& entry : g.neighbors(v))
                    if (!in_set[entry.vertex]) boundary.insert(entry.vertex);
            if (boundary.empty()) break;
            for (VertexId cand : boundary) {
                in_set[cand] = 1;
                int b = boundary_size(g, in_set);
                in_set[cand] = 0;
                if (b < best_boundary) {
                    best_boundary = b;
                    best = cand;
                }
            }
            subset.push_back(best);
            in_set[best] = 1;
            consider(subset);
        }
    }
    return out;
}

std::vector<std::uint64_t> count_short_cycles(const Graph& g, int max_length) {
    // counts[j] for j = 3..max_length, by DFS from each minimal start vertex
    std::vector<std::uint64_t> counts(std::max(0, max_length - 2), 0);
    const int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<VertexId> path;
    std::function<void(VertexId, VertexId)> walk = [&](VertexId start, VertexId v) {
        for (const auto& entry : g.neighbors(v)) {
            VertexId w = entry.vertex;
            if (w == start && path.size() >= 3) {
                // count each cycle once: minimal start, fixed direction
                if (path[1] < path.back()) ++counts[path.size() - 3];
                continue;
            }
            if (w <= start || on_path[w]) continue;
            if (static_cast<int>(path.size()) == max_length) continue;
            on_path[w] = 1;
            path.push_back(w);
            walk(start, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };
    for (VertexId s = 0; s < n; ++s) {
        on_path[s] = 1;
        path = {s};
        walk(s, s);
        on_path[s] = 0;
    }
    return counts;
}

Labeling fragmenting_labeling(const Graph& g, std::uint64_t seed) {
    const int n = g.vertex_count();
    std::mt19937_64 rng(seed);
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    // greedy independent set capped so that |N| stays at most |P|
    const int edge_budget = g.edge_count() / 2;
    std::vector<char> blocked(n, 0);
    Labeling f = Labeling::all_positive(g.edge_count());
    int negatives = 0;
    for (VertexId v : order) {
        if (blocked[v]) continue;
        int fresh = 0;
        for (const auto& entry : g.neighbors(v))
            if (f.sign(entry.edge) > 0) ++fresh;
        if (negatives + fresh > edge_budget) continue;
        for (const auto& entry : g.neighbors(v)) {
            if (f.sign(entry.edge) > 0) {
                f.set(entry.edge, -1);
                ++negatives;
            }
            blocked[entry.vertex] = 1;
        }
        blocked[v] = 1;
    }
    return f;
}

Section3Report section3_experiment(int n, std::uint64_t samples, std::uint64_t seed) {
    Section3Report report;
    report.n = n;
    report.samples = samples;
    report.base_seed = seed;

    double sum_t = 0, sum_a1 = 0, sum_bound = 0;
    std::uint64_t fragmenting_rows = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const std::uint64_t sample_seed = seed + s;
        auto sample = random_regular(n, 3, sample_seed);
        if (!sample.graph.connected()) {
            ++report.disconnected_skipped;
            continue;
        }
        auto run = [&](const Labeling& f, const char* kind) {
            Section3Row row;
            row.sample_index = s;
            row.seed = sample_seed;
            row.labeling_kind = kind;
            auto stats = positive_component_stats(sample.graph, f);
            row.t = stats.component_count;
            row.a1 = stats.isolated_vertices;
            row.negative_edges = stats.negative_edges;
            row.positive_edges = stats.positive_edges;
            const Labeling& oriented = stats.negated ? f.negated() : f;
            auto tree = positive_greedy_tree(sample.graph, oriented);
            row.tree_negative_edges = tree.negative_edges_used;
            row.witness_bound_over_n = (static_cast<double>(n) + 1.0 - 2.0 * row.t) / n;
            row.eq1_residual =
                static_cast<double>(row.t) - row.negative_edges / 2.0 - row.a1 / 4.0;
            report.rows.push_back(row);
            return row;
        };
        auto frag = run(fragmenting_labeling(sample.graph, sample_seed ^ 0x9e3779b97f4a7c15ull),
                        "fragmenting");
        run(Labeling::all_positive(sample.graph.edge_count()), "all-positive");
        sum_t += static_cast<double>(frag.t) / n;
        sum_a1 += static_cast<double>(frag.a1) / n;
        sum_bound += frag.witness_bound_over_n;
        report.max_t_over_n = std::max(report.max_t_over_n, static_cast<double>(frag.t) / n);
        report.max_eq1_residual = std::max(report.max_eq1_residual, frag.eq1_residual);
        ++fragmenting_rows;
    }
    if (fragmenting_rows > 0) {
        report.mean_t_over_n = sum_t / fragmenting_rows;
        report.mean_a1_over_n = sum_a1 / fragmenting_rows;
        report.mean_witness_bound_over_n = sum_bound / fragmenting_rows;
    }
    return report;
}

} // namespace graphdisc
