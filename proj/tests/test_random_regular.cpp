#include "doctest.h"

#include <cmath>
#include <random>

#include "graphdisc/errors.hpp"
#include "graphdisc/random_regular.hpp"

using namespace graphdisc;

TEST_CASE("random_regular sampling") {
    SUBCASE("the unique 3-regular graph on 4 vertices is K_4") {
        auto s = random_regular(4, 3, 1);
        CHECK(s.graph.edge_count() == 6);
        for (VertexId u = 0; u < 4; ++u)
            for (VertexId v = u + 1; v < 4; ++v) CHECK(s.graph.adjacent(u, v));
    }
    SUBCASE("degree and simplicity at n = 100") {
        auto s = random_regular(100, 3, 7);
        CHECK(s.graph.vertex_count() == 100);
        CHECK(s.graph.edge_count() == 150);
        for (VertexId v = 0; v < 100; ++v) CHECK(s.graph.degree(v) == 3);
    }
    SUBCASE("odd n*d is rejected") {
        CHECK_THROWS_AS(random_regular(5, 3, 1), std::invalid_argument);
        CHECK_THROWS_AS(random_regular(4, 5, 1), std::invalid_argument);
    }
    SUBCASE("fixed seeds reproduce") {
        auto a = random_regular(30, 3, 99);
        auto b = random_regular(30, 3, 99);
        CHECK(serialize_graph(a.graph) == serialize_graph(b.graph));
    }
}

TEST_CASE("short cycle census against the Poisson means") {
    // lighter version of the acceptance criterion: 200 samples at n = 300
    const int samples = 200;
    const int n = 300;
    double sum3 = 0;
    for (int s = 0; s < samples; ++s) {
        auto g = random_regular(n, 3, 1000 + s);
        auto counts = count_short_cycles(g.graph, 5);
        sum3 += static_cast<double>(counts[0]);
    }
    double mean3 = sum3 / samples;
    double lambda = 8.0 / 6.0;
    double sigma_mean = std::sqrt(lambda / samples);
    CHECK(std::abs(mean3 - lambda) <= 4 * sigma_mean); // wide band at this size
}

TEST_CASE("positive_component_stats invariants") {
    SUBCASE("all-positive labels") {
        auto s = random_regular(60, 3, 11);
        auto stats = positive_component_stats(s.graph, Labeling::all_positive(90));
        CHECK(stats.component_count == components(s.graph).size());
        CHECK(stats.negative_edges == 0);
        CHECK_FALSE(stats.negated);
    }
    SUBCASE("all-negative flips by convention") {
        auto s = random_regular(60, 3, 12);
        auto stats = positive_component_stats(s.graph, Labeling::all_negative(90));
        CHECK(stats.negated);
        CHECK(stats.negative_edges == 0);
        CHECK(stats.component_count == components(s.graph).size());
    }
    SUBCASE("identities on random labelings") {
        std::mt19937_64 rng(5);
        auto s = random_regular(400, 3, 13);
        for (int trial = 0; trial < 10; ++trial) {
            Labeling f = Labeling::random(s.graph.edge_count(), rng);
            auto stats = positive_component_stats(s.graph, f);
            CHECK(stats.negative_edges + stats.positive_edges == s.graph.edge_count());
            CHECK(stats.negative_edges <= stats.positive_edges);
            std::uint64_t t = 0, mass = 0;
            for (const auto& [size, count] : stats.size_histogram) {
                t += count;
                mass += static_cast<std::uint64_t>(size) * count;
            }
            CHECK(t == stats.component_count);
            CHECK(mass == static_cast<std::uint64_t>(s.graph.vertex_count()));
            CHECK(stats.isolated_vertices == stats.size_histogram[1]);
        }
    }
}

TEST_CASE("positive_greedy_tree uses exactly t-1 negative edges") {
    SUBCASE("all-positive labels give a clean tree") {
        auto s = random_regular(50, 3, 21);
        REQUIRE(s.graph.connected());
        auto r = positive_greedy_tree(s.graph, Labeling::all_positive(75));
        CHECK(r.negative_edges_used == 0);
        CHECK(r.tree.sum == 49);
        CHECK(r.positive_components == 1);
    }
    SUBCASE("spanning positive subgraph needs no negative edge") {
        // a negative edge inside a cycle leaves G+ connected
        Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
        Labeling f = Labeling::all_positive(5);
        f.set(2, -1);
        auto r = positive_greedy_tree(c5, f);
        CHECK(r.positive_components == 1);
        CHECK(r.negative_edges_used == 0);
    }
    SUBCASE("random 3-regular instances") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 25; ++trial) {
            auto s = random_regular(100, 3, 500 + trial);
            if (!s.graph.connected()) continue;
            Labeling f = Labeling::random(s.graph.edge_count(), rng);
            auto stats = positive_component_stats(s.graph, f);
            const Labeling oriented = stats.negated ? f.negated() : f;
            auto r = positive_greedy_tree(s.graph, oriented);
            CHECK(r.positive_components == stats.component_count);
            CHECK(r.negative_edges_used == static_cast<int>(stats.component_count) - 1);
            CHECK(r.tree.sum == r.certified_sum);
        }
    }
    Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(positive_greedy_tree(two, Labeling::all_positive(2)), empty_family_error);
}

TEST_CASE("isoperimetry_scan") {
    SUBCASE("K_4 pairs beat singletons") {
        auto r = isoperimetry_scan(make_complete(4), 2);
        CHECK(r.exhaustive);
        CHECK(r.ratio == doctest::Approx(1.0));
        CHECK(r.argmin.size() == 2);
    }
    SUBCASE("C_6 triple has boundary 2") {
        Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
        auto r = isoperimetry_scan(c6, 3);
        CHECK(r.exhaustive);
        CHECK(r.ratio == doctest::Approx(2.0 / 3.0));
    }
    SUBCASE("a whole small component achieves ratio 0") {
        Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
        auto r = isoperimetry_scan(g, 3);
        CHECK(r.ratio == doctest::Approx(0.0));
    }
    SUBCASE("heuristic mode flags itself and stays an upper bound") {
        auto s = random_regular(60, 3, 77);
        auto r = isoperimetry_scan(s.graph, 10, 1000, 3);
        CHECK_FALSE(r.exhaustive);
        CHECK(r.ratio > 0.0);
        CHECK(static_cast<int>(r.argmin.size()) <= 10);
    }
}

TEST_CASE("fragmenting_labeling keeps the sign convention") {
    auto s = random_regular(200, 3, 41);
    Labeling f = fragmenting_labeling(s.graph, 41);
    int negatives = 0;
    for (EdgeId e = 0; e < s.graph.edge_count(); ++e) negatives += f.sign(e) < 0;
    CHECK(negatives <= s.graph.edge_count() - negatives);
    // it does fragment: more positive components than the plain graph
    auto stats = positive_component_stats(s.graph, f);
    CHECK(stats.component_count > components(s.graph).size());
}

TEST_CASE("section3_experiment") {
    auto report = section3_experiment(200, 5, 900);
    CHECK(report.rows.size() >= 2 * (5 - report.disconnected_skipped));
    for (const auto& row : report.rows) {
        CHECK(row.negative_edges <= row.positive_edges);
        if (row.labeling_kind == "all-positive") {
            CHECK(row.t == 1);
            CHECK(row.tree_negative_edges == 0);
        } else {
            CHECK(row.tree_negative_edges == static_cast<int>(row.t) - 1);
        }
    }
    CHECK(report.mean_t_over_n > 0.0);
    CHECK(report.mean_witness_bound_over_n <= 1.0);
}
