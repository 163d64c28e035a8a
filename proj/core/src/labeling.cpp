#include "graphdisc/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace graphdisc {

Labeling::Labeling(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
    for (auto s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("labels must be +1 or -1");
}

Labeling Labeling::all_positive(int edge_count) {
    return Labeling(std::vector<std::int8_t>(edge_count, 1));
}

Labeling Labeling::all_negative(int edge_count) {
    return Labeling(std::vector<std::int8_t>(edge_count, -1));
}

Labeling Labeling::random(int edge_count, std::mt19937_64& rng) {
    std::vector<std::int8_t> signs(edge_count);
    std::bernoulli_distribution coin(0.5);
    for (auto& s : signs) s = coin(rng) ? 1 : -1;
    return Labeling(std::move(signs));
}

Labeling Labeling::from_bits(int edge_count, std::uint64_t bits) {
    if (edge_count > 64) throw std::invalid_argument("from_bits supports at most 64 edges");
    std::vector<std::int8_t> signs(edge_count);
    for (int e = 0; e < edge_count; ++e) signs[e] = (bits >> e) & 1 ? -1 : 1;
    return Labeling(std::move(signs));
}

int Labeling::sign(EdgeId e) const {
    if (e < 0 || e >= size()) throw std::out_of_range("unknown edge " + std::to_string(e));
    return signs_[e];
}

void Labeling::set(EdgeId e, int sign) {
    if (e < 0 || e >= size()) throw std::out_of_range("unknown edge " + std::to_string(e));
    if (sign != 1 && sign != -1) throw std::invalid_argument("labels must be +1 or -1");
    signs_[e] = static_cast<std::int8_t>(sign);
}

Labeling Labeling::negated() const {
    std::vector<std::int8_t> signs(signs_.size());
    for (size_t i = 0; i < signs_.size(); ++i) signs[i] = -signs_[i];
    return Labeling(std::move(signs));
}

std::string Labeling::to_string() const {
    std::string out(signs_.size(), '+');
    for (size_t i = 0; i < signs_.size(); ++i)
        if (signs_[i] < 0) out[i] = '-';
    return out;
}

Labeling Labeling::parse(const std::string& text) {
    std::vector<std::int8_t> signs;
    signs.reserve(text.size());
    for (char c : text) {
        if (c == '+')
            signs.push_back(1);
        else if (c == '-')
            signs.push_back(-1);
        else if (c == '\n' || c == '\r' || c == ' ')
            continue;
        else
            throw std::invalid_argument(std::string("unexpected label character '") + c + "'");
    }
    return Labeling(std::move(signs));
}

std::string Labeling::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (auto s : signs_) j.push_back(static_cast<int>(s));
    return j.dump();
}

Labeling Labeling::from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    std::vector<std::int8_t> signs;
    for (const auto& v : j) signs.push_back(static_cast<std::int8_t>(v.get<int>()));
    return Labeling(std::move(signs));
}

int subgraph_sum(const Labeling& f, std::span<const EdgeId> edges) {
    int sum = 0;
    for (EdgeId e : edges) sum += f.sign(e);
    return sum;
}

Labeling restrict_labeling(const Labeling& f, std::span<const EdgeId> edge_to_parent) {
    std::vector<std::int8_t> signs;
    signs.reserve(edge_to_parent.size());
    for (EdgeId e : edge_to_parent) signs.push_back(static_cast<std::int8_t>(f.sign(e)));
    return Labeling(std::move(signs));
}

SignedNeighborhood signed_neighborhoods(const Graph& g, const Labeling& f, VertexId v) {
    SignedNeighborhood out;
    for (const auto& entry : g.neighbors(v)) {
        if (f.sign(entry.edge) > 0)
            out.positive.push_back(entry.vertex);
        else
            out.negative.push_back(entry.vertex);
    }
    return out;
}

int positive_degree(const Graph& g, const Labeling& f, VertexId v) {
    int d = 0;
    for (const auto& entry : g.neighbors(v)) d += f.sign(entry.edge) > 0;
    return d;
}

int negative_degree(const Graph& g, const Labeling& f, VertexId v) {
    int d = 0;
    for (const auto& entry : g.neighbors(v)) d += f.sign(entry.edge) < 0;
    return d;
}

int BalanceClass::balanced_count() const {
    return static_cast<int>(std::count(tags.begin(), tags.end(), BalanceTag::balanced));
}

std::vector<VertexId> BalanceClass::balanced_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<int>(tags.size()); ++v)
        if (tags[v] == BalanceTag::balanced) out.push_back(v);
    return out;
}

BalanceClass classify_balance(const Graph& g, const Labeling& f, double nu) {
    if (!(nu > 0.0 && nu < 1.0)) throw std::invalid_argument("nu must lie in (0, 1)");
    BalanceClass out;
    out.nu = nu;
    out.threshold = static_cast<int>(std::ceil(nu * g.vertex_count()));
    out.tags.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int pos = positive_degree(g, f, v);
        int neg = g.degree(v) - pos;
        if (pos >= out.threshold && neg >= out.threshold)
            out.tags[v] = BalanceTag::balanced;
        else
            out.tags[v] = pos >= neg ? BalanceTag::unbalanced_positive
                                     : BalanceTag::unbalanced_negative;
    }
    return out;
}

int triangle_g(const Graph& g, const Labeling& f, VertexId v, VertexId u, VertexId w) {
    if (v == u || v == w || u == w) throw std::invalid_argument("triangle vertices must differ");
    auto uv = g.edge_between(u, v);
    auto vw = g.edge_between(v, w);
    auto uw = g.edge_between(u, w);
    if (!uv || !vw || !uw)
        throw std::invalid_argument("vertices " + std::to_string(v) + ", " + std::to_string(u) +
                                    ", " + std::to_string(w) + " do not span a triangle");
    return f.sign(*uv) + f.sign(*vw) - f.sign(*uw);
}

int color_g_value(VertexColor c) {
    switch (c) {
        case VertexColor::red: return -1;
        case VertexColor::blue: return 1;
        case VertexColor::dark_red: return -3;
        case VertexColor::dark_blue: return 3;
    }
    return 0;
}

namespace {

int g_value_slot(int g_value) {
    switch (g_value) {
        case -1: return 0;
        case 1: return 1;
        case -3: return 2;
        case 3: return 3;
    }
    return -1;
}

} // namespace

bool ColorSet::has_color(VertexId v, VertexColor c) const {
    return colors.at(v) & (1u << static_cast<int>(c));
}

int ColorSet::color_count(VertexId v) const {
    return std::popcount(static_cast<unsigned>(colors.at(v)));
}

std::vector<VertexId> ColorSet::multi_colored() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<int>(colors.size()); ++v)
        if (color_count(v) > 1) out.push_back(v);
    return out;
}

std::vector<VertexId> ColorSet::uncolored() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<int>(colors.size()); ++v)
        if (colors[v] == 0) out.push_back(v);
    return out;
}

int ColorSet::triangles_at(VertexId v) const {
    const auto& c = triangle_counts.at(v);
    return c[0] + c[1] + c[2] + c[3];
}

ColorSet color_vertices(const Graph& g, const Labeling& f, int tau) {
    if (tau < 1) throw std::invalid_argument("tau must be positive");
    ColorSet out;
    out.tau = tau;
    out.triangle_counts.assign(g.vertex_count(), {0, 0, 0, 0});
    out.colors.assign(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto nbrs = g.neighbors(v);
        for (size_t i = 0; i < nbrs.size(); ++i) {
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                VertexId u = nbrs[i].vertex, w = nbrs[j].vertex;
                auto uw = g.edge_between(u, w);
                if (!uw) continue;
                int value = f.sign(nbrs[i].edge) + f.sign(nbrs[j].edge) - f.sign(*uw);
                ++out.triangle_counts[v][g_value_slot(value)];
            }
        }
        for (int c = 0; c < 4; ++c)
            if (out.triangle_counts[v][c] >= tau) out.colors[v] |= (1u << c);
    }
    return out;
}

} // namespace graphdisc
