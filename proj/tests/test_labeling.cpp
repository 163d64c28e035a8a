#include "doctest.h"

#include <random>

#include "graphdisc/graph.hpp"
#include "graphdisc/labeling.hpp"
#include "support.hpp"

using namespace graphdisc;

TEST_CASE("subgraph_sum basics") {
    Labeling f = Labeling::all_positive(10);
    std::vector<EdgeId> seven{0, 1, 2, 3, 4, 5, 6};
    CHECK(subgraph_sum(f, seven) == 7);
    CHECK(subgraph_sum(f, std::vector<EdgeId>{}) == 0);
    CHECK(subgraph_sum(f.negated(), seven) == -7);
    CHECK_THROWS_AS(subgraph_sum(f, std::vector<EdgeId>{10}), std::out_of_range);
}

TEST_CASE("labeling serialization") {
    Labeling f = Labeling::parse("+-+-");
    CHECK(f.size() == 4);
    CHECK(f.sign(0) == 1);
    CHECK(f.sign(1) == -1);
    CHECK(f.to_string() == "+-+-");
    CHECK(Labeling::from_json(f.to_json()) == f);
    CHECK_THROWS_AS(Labeling::parse("+x"), std::invalid_argument);
    CHECK(f.negated().negated() == f);
}

TEST_CASE("signed neighborhoods partition the neighborhood") {
    Graph k3 = make_complete(3);
    Labeling f = Labeling::all_positive(3);
    auto nb = signed_neighborhoods(k3, f, 0);
    CHECK(nb.negative.empty());
    CHECK(nb.positive.size() == 2);

    f.set(*k3.edge_between(0, 1), -1);
    nb = signed_neighborhoods(k3, f, 0);
    CHECK(nb.negative.size() == 1);
    CHECK(nb.negative[0] == 1);

    // recount on a random labeling of K_10
    Graph k10 = make_complete(10);
    std::mt19937_64 rng(7);
    Labeling rf = Labeling::random(k10.edge_count(), rng);
    for (VertexId v = 0; v < 10; ++v) {
        auto sn = signed_neighborhoods(k10, rf, v);
        CHECK(static_cast<int>(sn.positive.size() + sn.negative.size()) == k10.degree(v));
        CHECK(static_cast<int>(sn.positive.size()) == positive_degree(k10, rf, v));
    }
    CHECK_THROWS_AS(signed_neighborhoods(k3, f, 11), std::out_of_range);
}

TEST_CASE("classify_balance thresholds") {
    SUBCASE("all-positive labels leave every vertex unbalanced-positive") {
        Graph g = make_complete(6);
        auto bc = classify_balance(g, Labeling::all_positive(g.edge_count()), 0.3);
        for (auto tag : bc.tags) CHECK(tag == BalanceTag::unbalanced_positive);
        CHECK(bc.balanced_count() == 0);
    }
    SUBCASE("K_5 vertex with a 2/2 split is balanced at threshold 2") {
        Graph k5 = make_complete(5);
        Labeling f = Labeling::all_positive(k5.edge_count());
        f.set(*k5.edge_between(0, 1), -1);
        f.set(*k5.edge_between(0, 2), -1);
        auto bc = classify_balance(k5, f, 0.4);
        CHECK(bc.threshold == 2);
        CHECK(bc.tags[0] == BalanceTag::balanced);
        CHECK(bc.tags[4] == BalanceTag::unbalanced_positive);
    }
    SUBCASE("the tight example has exactly 3n/4 balanced vertices") {
        auto r = make_complete_minus_clique(8);
        Labeling f = support::tight_example_labeling(r.graph, r.independent_set);
        auto bc = classify_balance(r.graph, f, 0.25);
        CHECK(bc.threshold == 2);
        CHECK(bc.balanced_count() == 6);
        for (VertexId v : r.independent_set)
            CHECK(bc.tags[v] == BalanceTag::unbalanced_negative);
    }
    Graph g = make_complete(4);
    CHECK_THROWS_AS(classify_balance(g, Labeling::all_positive(6), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(classify_balance(g, Labeling::all_positive(6), 1.0), std::invalid_argument);
}

TEST_CASE("triangle_g values and symmetry") {
    Graph k3 = make_complete(3);
    Labeling f = Labeling::all_positive(3);
    auto e = [&](VertexId u, VertexId v) { return *k3.edge_between(u, v); };

    f.set(e(0, 1), 1);
    f.set(e(0, 2), 1);
    f.set(e(1, 2), -1);
    CHECK(triangle_g(k3, f, 0, 1, 2) == 3); // two positive legs over a negative base

    f.set(e(0, 1), -1);
    f.set(e(0, 2), -1);
    f.set(e(1, 2), 1);
    CHECK(triangle_g(k3, f, 0, 1, 2) == -3);

    f.set(e(0, 1), 1);
    f.set(e(0, 2), -1);
    f.set(e(1, 2), -1);
    CHECK(triangle_g(k3, f, 0, 1, 2) == 1);

    CHECK(triangle_g(k3, f, 0, 1, 2) == triangle_g(k3, f, 0, 2, 1));

    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Labeling pf = Labeling::all_positive(2);
    CHECK_THROWS_AS(triangle_g(p3, pf, 1, 0, 2), std::invalid_argument);
}

TEST_CASE("color_vertices") {
    SUBCASE("all-positive K_4 is blue everywhere") {
        Graph k4 = make_complete(4);
        auto cs = color_vertices(k4, Labeling::all_positive(6), 1);
        for (VertexId v = 0; v < 4; ++v) {
            CHECK(cs.has_color(v, VertexColor::blue));
            CHECK(cs.color_count(v) == 1);
        }
        CHECK(cs.multi_colored().empty());
    }
    SUBCASE("all-negative K_4 is red everywhere") {
        Graph k4 = make_complete(4);
        auto cs = color_vertices(k4, Labeling::all_negative(6), 1);
        for (VertexId v = 0; v < 4; ++v) {
            CHECK(cs.has_color(v, VertexColor::red));
            CHECK(cs.color_count(v) == 1);
        }
    }
    SUBCASE("a cutoff above the triangle count uncolors") {
        Graph k4 = make_complete(4);
        auto cs = color_vertices(k4, Labeling::all_positive(6), 4);
        CHECK(cs.uncolored().size() == 4); // each vertex sits in 3 triangles
    }
}

TEST_CASE("negating the labeling swaps the color classes") {
    Graph g = make_complete(7);
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        Labeling f = Labeling::random(g.edge_count(), rng);
        auto cs = color_vertices(g, f, 2);
        auto ns = color_vertices(g, f.negated(), 2);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            CHECK(cs.has_color(v, VertexColor::red) == ns.has_color(v, VertexColor::blue));
            CHECK(cs.has_color(v, VertexColor::blue) == ns.has_color(v, VertexColor::red));
            CHECK(cs.has_color(v, VertexColor::dark_red) ==
                  ns.has_color(v, VertexColor::dark_blue));
            CHECK(cs.has_color(v, VertexColor::dark_blue) ==
                  ns.has_color(v, VertexColor::dark_red));
        }
    }
}

TEST_CASE("per-vertex triangle counts add up") {
    Graph g = make_complete(8);
    std::mt19937_64 rng(5);
    Labeling f = Labeling::random(g.edge_count(), rng);
    auto cs = color_vertices(g, f, 1);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        // count triangles containing v directly
        int triangles = 0;
        auto nbrs = g.neighbors(v);
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j)
                if (g.adjacent(nbrs[i].vertex, nbrs[j].vertex)) ++triangles;
        CHECK(cs.triangles_at(v) == triangles);
    }
}

TEST_CASE("balance classification is isomorphism invariant") {
    Graph g = make_grid(3, 3);
    std::mt19937_64 rng(11);
    Labeling f = Labeling::random(g.edge_count(), rng);

    std::vector<VertexId> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = support::permuted_graph(g, perm);
    // carry the labels across the isomorphism
    Labeling hf = Labeling::all_positive(h.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        hf.set(*h.edge_between(perm[u], perm[v]), f.sign(e));
    }
    auto bg = classify_balance(g, f, 0.3);
    auto bh = classify_balance(h, hf, 0.3);
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(bg.tags[v] == bh.tags[perm[v]]);
}
