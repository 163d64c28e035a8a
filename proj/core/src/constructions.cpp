#include "graphdisc/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "graphdisc/errors.hpp"

namespace graphdisc {

namespace {

const GridSpec& require_grid(const Graph& g) {
    if (!g.grid()) throw std::invalid_argument("operation needs a grid graph");
    return *g.grid();
}

// Grid coordinates with an optional transpose, so constructions can assume
// a preferred orientation without copying the graph.
struct GridView {
    const Graph* g;
    GridSpec spec;
    bool transposed;

    GridView(const Graph& graph, bool transpose) : g(&graph), spec(require_grid(graph)),
                                                   transposed(transpose) {}

    int rows() const { return transposed ? spec.cols : spec.rows; }
    int cols() const { return transposed ? spec.rows : spec.cols; }
    VertexId vertex(int i, int j) const {
        return transposed ? spec.vertex(j, i) : spec.vertex(i, j);
    }
    EdgeId edge(VertexId u, VertexId v) const { return *g->edge_between(u, v); }
    /// Vertical edge (in view coordinates) joining rows i, i+1 at column j.
    EdgeId vertical(int i, int j) const { return edge(vertex(i, j), vertex(i + 1, j)); }
};

std::vector<EdgeId> sequence_edges(const Graph& g, const std::vector<VertexId>& seq) {
    std::vector<EdgeId> edges;
    edges.reserve(seq.size());
    for (size_t i = 0; i + 1 < seq.size(); ++i) edges.push_back(*g.edge_between(seq[i], seq[i + 1]));
    return edges;
}

} // namespace

LabeledGrid half_grid_labeling(int k) {
    if (k < 2) throw std::invalid_argument("half-grid labeling needs k >= 2");
    Graph g = make_grid(k, k);
    const GridSpec& spec = *g.grid();
    const int lower_rows = (k + 1) / 2; // rows 0..lower_rows-1 form the lower region
    Labeling f = Labeling::all_positive(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        auto [iu, ju] = spec.coords(u);
        auto [iv, jv] = spec.coords(v);
        if (iu == iv) {
            // horizontal edge: the sign of its row's region
            f.set(e, iu < lower_rows ? -1 : 1);
        } else {
            int low = std::min(iu, iv);
            if (low + 1 < lower_rows)
                f.set(e, -1);
            else if (low >= lower_rows)
                f.set(e, 1);
            else if (k % 2 == 1)
                f.set(e, 1); // odd k: all crossing edges positive
            else
                f.set(e, ju % 2 == 0 ? 1 : -1); // even k: balanced crossing
        }
    }
    return LabeledGrid{std::move(g), std::move(f)};
}

LabeledGrid p2_strip_labeling(int k) {
    if (k < 2) throw std::invalid_argument("strip labeling needs k >= 2");
    Graph g = make_grid(2, k);
    const GridSpec& spec = *g.grid();
    const int left_cols = (k + 1) / 2; // columns 0..left_cols-1 form the left block
    Labeling f = Labeling::all_positive(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        auto [iu, ju] = spec.coords(u);
        auto [iv, jv] = spec.coords(v);
        if (iu == iv) {
            // horizontal edge: sign of the block holding its right endpoint,
            // so the two connector edges between the blocks come out +1
            int right = std::max(ju, jv);
            f.set(e, right <= left_cols - 1 ? -1 : 1);
        } else {
            // rung at column ju; the column shared by the two blocks keeps
            // +1 when k is odd
            if (ju < left_cols - 1)
                f.set(e, -1);
            else if (ju == left_cols - 1)
                f.set(e, k % 2 == 1 ? 1 : -1);
            else
                f.set(e, 1);
        }
    }
    return LabeledGrid{std::move(g), std::move(f)};
}

void CutPartition::validate(const Graph& g) const {
    std::vector<int> region(g.vertex_count(), -1);
    auto place = [&](const std::vector<VertexId>& part, int tag, const char* name) {
        for (VertexId v : part) {
            g.check_vertex(v);
            if (region[v] != -1)
                throw std::invalid_argument(std::string("cut partition: vertex ") +
                                            std::to_string(v) + " appears twice");
            region[v] = tag;
            (void)name;
        }
    };
    place(a, 0, "A");
    place(b, 1, "B");
    place(c, 2, "C");
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (region[v] == -1)
            throw std::invalid_argument("cut partition: vertex " + std::to_string(v) +
                                        " is uncovered");
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if ((region[u] == 0 && region[v] == 1) || (region[u] == 1 && region[v] == 0))
            throw std::invalid_argument("cut partition: edge between A and B (" +
                                        std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    if (a.size() > b.size())
        throw std::invalid_argument("cut partition: |A| must not exceed |B|");
}

Labeling cut_labeling(const Graph& g, const CutPartition& cut) {
    cut.validate(g);
    std::vector<int> region(g.vertex_count(), 2);
    for (VertexId v : cut.a) region[v] = 0;
    for (VertexId v : cut.b) region[v] = 1;
    Labeling f = Labeling::all_positive(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        bool touches_b = region[u] == 1 || region[v] == 1;
        f.set(e, touches_b ? -1 : 1); // E(A), E(A,C), E(C) positive; rest negative
    }
    return f;
}

CutPartition find_separator(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("separator heuristic needs a connected graph");
    const int n = g.vertex_count();
    std::vector<VertexId> sources{0, n / 3, (2 * n) / 3, n - 1};
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

    std::optional<CutPartition> best;
    int best_bound = 0;
    std::vector<int> layer(n);
    for (VertexId s : sources) {
        std::fill(layer.begin(), layer.end(), -1);
        std::vector<VertexId> frontier{s};
        layer[s] = 0;
        int depth = 0;
        std::vector<std::vector<VertexId>> layers{{s}};
        while (!frontier.empty()) {
            std::vector<VertexId> next;
            for (VertexId v : frontier)
                for (const auto& entry : g.neighbors(v))
                    if (layer[entry.vertex] < 0) {
                        layer[entry.vertex] = depth + 1;
                        next.push_back(entry.vertex);
                    }
            if (next.empty()) break;
            layers.push_back(next);
            frontier = std::move(next);
            ++depth;
        }
        for (size_t cut_layer = 0; cut_layer < layers.size(); ++cut_layer) {
            CutPartition cand;
            cand.c = layers[cut_layer];
            for (size_t l = 0; l < cut_layer; ++l)
                cand.a.insert(cand.a.end(), layers[l].begin(), layers[l].end());
            for (size_t l = cut_layer + 1; l < layers.size(); ++l)
                cand.b.insert(cand.b.end(), layers[l].begin(), layers[l].end());
            if (cand.a.size() > cand.b.size()) std::swap(cand.a, cand.b);
            int bound = cand.bound();
            if (!best || bound < best_bound) {
                best = std::move(cand);
                best_bound = bound;
            }
        }
    }
    std::sort(best->a.begin(), best->a.end());
    std::sort(best->b.begin(), best->b.end());
    std::sort(best->c.begin(), best->c.end());
    best->validate(g);
    return *best;
}

SignClassification grid_sign_classification(const Graph& g, const Labeling& f) {
    require_grid(g);
    SignClassification out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int pos = 0, neg = 0;
        for (const auto& entry : g.neighbors(v)) (f.sign(entry.edge) > 0 ? pos : neg) += 1;
        if (neg == 0)
            out.all_positive.push_back(v);
        else if (pos == 0)
            out.all_negative.push_back(v);
        else
            out.mixed.push_back(v);
    }
    return out;
}

std::optional<ParityTreePair> parity_tree_pair(const Graph& g, const Labeling& f) {
    const GridSpec& spec = require_grid(g);
    if (spec.rows < 2 || spec.cols < 2)
        throw std::invalid_argument("parity tree pair needs a grid with both sides >= 2");

    auto signs = grid_sign_classification(g, f);
    std::array<int, 4> mixed_per_class{0, 0, 0, 0};
    for (VertexId v : signs.mixed) {
        auto [i, j] = spec.coords(v);
        ++mixed_per_class[(i % 2) * 2 + (j % 2)];
    }
    int best_class = static_cast<int>(std::max_element(mixed_per_class.begin(),
                                                       mixed_per_class.end()) -
                                      mixed_per_class.begin());
    const int t = mixed_per_class[best_class];
    if (t == 0) return std::nullopt;
    const int r = best_class / 2, s = best_class % 2;

    std::vector<char> in_class(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto [i, j] = spec.coords(v);
        in_class[v] = (i % 2 == r && j % 2 == s);
    }

    // base tree on the other three parity classes: horizontal spines along
    // the full rows, one vertical ladder between consecutive spines, and
    // the leftover partial-row vertices hung on a neighboring spine
    std::vector<EdgeId> base;
    std::vector<char> in_base(g.vertex_count(), 0);
    for (int i = 0; i < spec.rows; ++i) {
        if (i % 2 == r) continue; // partial row
        for (int j = 0; j + 1 < spec.cols; ++j)
            base.push_back(*g.edge_between(spec.vertex(i, j), spec.vertex(i, j + 1)));
        for (int j = 0; j < spec.cols; ++j) in_base[spec.vertex(i, j)] = 1;
    }
    const int ladder_col = s == 0 ? 1 : 0; // a column outside the selected class
    for (int i = 0; i + 2 < spec.rows; ++i) {
        if (i % 2 == r) continue; // connect full row i to full row i+2
        VertexId mid = spec.vertex(i + 1, ladder_col);
        base.push_back(*g.edge_between(spec.vertex(i, ladder_col), mid));
        base.push_back(*g.edge_between(mid, spec.vertex(i + 2, ladder_col)));
        in_base[mid] = 1;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (in_class[v] || in_base[v]) continue;
        auto [i, j] = spec.coords(v);
        VertexId anchor = i + 1 < spec.rows ? spec.vertex(i + 1, j) : spec.vertex(i - 1, j);
        base.push_back(*g.edge_between(v, anchor));
        in_base[v] = 1;
    }

    // leaf attachments for the selected class: fixed smallest-id edge for
    // unmixed vertices, sign-chosen edges for the mixed ones
    std::vector<EdgeId> plus_edges = base, minus_edges = base;
    std::vector<char> mixed_flag(g.vertex_count(), 0);
    for (VertexId v : signs.mixed) mixed_flag[v] = 1;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!in_class[v]) continue;
        if (!mixed_flag[v]) {
            EdgeId pick = -1;
            for (const auto& entry : g.neighbors(v))
                if (pick < 0 || entry.edge < pick) pick = entry.edge;
            plus_edges.push_back(pick);
            minus_edges.push_back(pick);
        } else {
            EdgeId pos = -1, neg = -1;
            for (const auto& entry : g.neighbors(v)) {
                if (f.sign(entry.edge) > 0 && (pos < 0 || entry.edge < pos)) pos = entry.edge;
                if (f.sign(entry.edge) < 0 && (neg < 0 || entry.edge < neg)) neg = entry.edge;
            }
            plus_edges.push_back(pos);
            minus_edges.push_back(neg);
        }
    }

    ParityTreePair out{
        make_witness(g, f, FamilyKind::spanning_trees, std::move(plus_edges)),
        make_witness(g, f, FamilyKind::spanning_trees, std::move(minus_edges)),
        t,
        {r, s},
    };
    return out;
}

namespace {

// One boustrophedon path over view rows (r0, r0+1): walk left to right and
// switch rows exactly at the columns in `switch_cols`.
std::vector<VertexId> stripe_walk(const GridView& view, int r0, const std::vector<char>& switch_cols,
                                  bool start_top) {
    const int cols = view.cols();
    int row = start_top ? r0 + 1 : r0;
    std::vector<VertexId> seq;
    seq.reserve(2 * cols);
    seq.push_back(view.vertex(row, 0));
    for (int j = 0; j < cols; ++j) {
        if (switch_cols[j]) {
            row = row == r0 ? r0 + 1 : r0;
            seq.push_back(view.vertex(row, j));
        }
        if (j + 1 < cols) seq.push_back(view.vertex(row, j + 1));
    }
    return seq;
}

struct StripeCandidates {
    // vertex sequences of P(X), P'(X), P(Y), P'(Y) over one 2-row stripe
    std::array<std::vector<VertexId>, 4> seqs;
    std::array<int, 4> sums{};
    int x_count = 0, y_count = 0;
    bool swapped = false;

    int best_index() const {
        int best = 0;
        for (int i = 1; i < 4; ++i)
            if (std::abs(sums[i]) > std::abs(sums[best])) best = i;
        return best;
    }
};

StripeCandidates build_stripe_candidates(const Graph& g, const Labeling& f, const GridView& view,
                                         int r0) {
    const int cols = view.cols();
    std::vector<char> pos_cols(cols, 0), neg_cols(cols, 0);
    int x = 0, y = 0;
    for (int j = 0; j < cols; ++j) {
        if (f.sign(view.vertical(r0, j)) > 0) {
            pos_cols[j] = 1;
            ++x;
        } else {
            neg_cols[j] = 1;
            ++y;
        }
    }
    StripeCandidates out;
    out.swapped = x < y;
    if (out.swapped) {
        std::swap(pos_cols, neg_cols);
        std::swap(x, y);
    }
    out.x_count = x;
    out.y_count = y;
    out.seqs[0] = stripe_walk(view, r0, pos_cols, true);
    out.seqs[1] = stripe_walk(view, r0, pos_cols, false);
    out.seqs[2] = stripe_walk(view, r0, neg_cols, true);
    out.seqs[3] = stripe_walk(view, r0, neg_cols, false);
    for (int i = 0; i < 4; ++i) {
        auto edges = sequence_edges(g, out.seqs[i]);
        out.sums[i] = subgraph_sum(f, edges);
    }
    return out;
}

GridView two_row_view(const Graph& g) {
    const GridSpec& spec = require_grid(g);
    if (spec.rows == 2) return GridView(g, false);
    if (spec.cols == 2) return GridView(g, true);
    throw std::invalid_argument("stripe paths need a 2-row grid");
}

} // namespace

const Witness& StripePaths::best() const {
    const Witness* all[4] = {&x_path, &x_path_mirror, &y_path, &y_path_mirror};
    const Witness* best = all[0];
    for (const Witness* w : all)
        if (std::abs(w->sum) > std::abs(best->sum)) best = w;
    return *best;
}

StripePaths stripe_paths(const Graph& g, const Labeling& f) {
    GridView view = two_row_view(g);
    auto cand = build_stripe_candidates(g, f, view, 0);
    StripePaths out{
        make_witness(g, f, FamilyKind::paths, sequence_edges(g, cand.seqs[0])),
        make_witness(g, f, FamilyKind::paths, sequence_edges(g, cand.seqs[1])),
        make_witness(g, f, FamilyKind::paths, sequence_edges(g, cand.seqs[2])),
        make_witness(g, f, FamilyKind::paths, sequence_edges(g, cand.seqs[3])),
        cand.x_count,
        cand.y_count,
        cand.swapped,
        view.cols(),
    };
    return out;
}

Witness grid_long_path(const Graph& g, const Labeling& f) {
    const GridSpec& spec = require_grid(g);
    if (spec.rows < 2 || spec.cols < 2)
        throw std::invalid_argument("long path construction needs both grid sides >= 2");
    GridView view(g, spec.rows > spec.cols); // orient so view.rows <= view.cols
    const int k = view.rows();

    struct StripePick {
        int base_row;
        std::vector<VertexId> seq; // left-to-right orientation
        int sum;
    };
    std::vector<StripePick> picks;
    for (int i = 0; 2 * i + 1 < k; ++i) {
        auto cand = build_stripe_candidates(g, f, view, 2 * i);
        int best = cand.best_index();
        picks.push_back({2 * i, std::move(cand.seqs[best]), cand.sums[best]});
    }
    int positive = static_cast<int>(
        std::count_if(picks.begin(), picks.end(), [](const auto& p) { return p.sum >= 0; }));
    bool keep_positive = positive * 2 >= static_cast<int>(picks.size());
    std::vector<StripePick> selected;
    for (auto& p : picks)
        if ((p.sum >= 0) == keep_positive) selected.push_back(std::move(p));

    auto row_of = [&](VertexId v) {
        auto [i, j] = spec.coords(v);
        return view.transposed ? j : i;
    };

    // assemble bottom-up, alternating the connector column; drop a path's
    // terminal vertical step when it would block the connector
    std::vector<VertexId> assembly;
    std::vector<char> visited(g.vertex_count(), 0);
    for (size_t idx = 0; idx < selected.size(); ++idx) {
        std::vector<VertexId> seg = selected[idx].seq;
        bool enter_left = idx % 2 == 0;
        if (!enter_left) std::reverse(seg.begin(), seg.end());
        if (!assembly.empty()) {
            // entry truncation: the segment's first step must not descend
            // into the connector's column
            if (seg.size() >= 2 && row_of(seg[1]) == row_of(seg[0]) - 1) {
                auto [i0, j0] = spec.coords(seg[0]);
                auto [i1, j1] = spec.coords(seg[1]);
                bool same_col = view.transposed ? i0 == i1 : j0 == j1;
                if (same_col) seg.erase(seg.begin());
            }
            // exit truncation: the assembly must not end on a downward
            // vertical step at the connector column
            if (assembly.size() >= 2) {
                VertexId last = assembly.back(), prev = assembly[assembly.size() - 2];
                auto [il, jl] = spec.coords(last);
                auto [ip, jp] = spec.coords(prev);
                bool same_col = view.transposed ? il == ip : jl == jp;
                if (same_col && row_of(prev) == row_of(last) + 1) {
                    visited[last] = 0;
                    assembly.pop_back();
                }
            }
            // vertical connector run between the stripes
            VertexId exit_v = assembly.back();
            auto exit_coords = spec.coords(exit_v);
            int col = view.transposed ? exit_coords.first : exit_coords.second;
            int from_row = row_of(exit_v);
            int to_row = row_of(seg.front());
            for (int rr = from_row + 1; rr < to_row; ++rr) {
                VertexId via = view.vertex(rr, col);
                assembly.push_back(via);
                visited[via] = 1;
            }
        }
        for (VertexId v : seg) {
            assembly.push_back(v);
            visited[v] = 1;
        }
    }
    return make_witness(g, f, FamilyKind::paths, sequence_edges(g, assembly));
}

BoundaryScan boundary_min_scan(int k) {
    return boundary_min_scan(k, (k * k - k) / 2, (k * k + k) / 2);
}

BoundaryScan boundary_min_scan(int k, int size_lo, int size_hi) {
    if (k < 1) throw std::invalid_argument("grid side must be positive");
    if (k > 4)
        throw oracle_limit_error("boundary scan is exhaustive over 2^(k^2) subsets; k <= 4 only");
    Graph g = make_grid(k, k);
    const int n = g.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> ends(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) ends[e] = g.edge(e);
    BoundaryScan out;
    out.size_lo = size_lo;
    out.size_hi = size_hi;
    out.min_boundary = g.edge_count() + 1;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int size = std::popcount(mask);
        if (size < size_lo || size > size_hi) continue;
        int separating = 0;
        for (const auto& [u, v] : ends) separating += ((mask >> u) ^ (mask >> v)) & 1;
        if (separating < out.min_boundary) {
            out.min_boundary = separating;
            out.argmin.clear();
            for (std::uint32_t bits = mask; bits; bits &= bits - 1)
                out.argmin.push_back(std::countr_zero(bits));
        }
    }
    return out;
}

} // namespace graphdisc
