#include "doctest.h"

#include <functional>
#include <random>
#include <set>

#include "graphdisc/hamilton_search.hpp"
#include "graphdisc/oracles.hpp"
#include "support.hpp"

using namespace graphdisc;

namespace {

// independent validator: n distinct vertices, n edges of g, all degrees 2,
// connected, and the stored sum recomputes
void check_hamilton_cycle(const Graph& g, const Labeling& f, const Witness& w) {
    REQUIRE(static_cast<int>(w.edges.size()) == g.vertex_count());
    std::vector<int> deg(g.vertex_count(), 0);
    std::set<EdgeId> distinct(w.edges.begin(), w.edges.end());
    CHECK(distinct.size() == w.edges.size());
    for (EdgeId e : w.edges) {
        auto [u, v] = g.edge(e);
        ++deg[u];
        ++deg[v];
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(deg[v] == 2);
    auto comps = components(g, [&](EdgeId e) { return distinct.count(e) > 0; });
    CHECK(comps.size() == 1);
    CHECK(w.sum == subgraph_sum(f, w.edges));
}

} // namespace

TEST_CASE("hamilton_with_forest") {
    SUBCASE("empty forest on K_6") {
        Graph g = make_complete(6);
        Labeling f = Labeling::all_positive(g.edge_count());
        auto r = hamilton_with_forest(g, f, {}, 0.1);
        REQUIRE(r.status == SearchStatus::ok);
        check_hamilton_cycle(g, f, *r.cycle);
    }
    SUBCASE("K_8 through one forced edge") {
        Graph g = make_complete(8);
        Labeling f = Labeling::all_positive(g.edge_count());
        std::vector<EdgeId> forest{*g.edge_between(2, 5)};
        auto r = hamilton_with_forest(g, f, forest, 0.1);
        REQUIRE(r.status == SearchStatus::ok);
        check_hamilton_cycle(g, f, *r.cycle);
        CHECK(std::binary_search(r.cycle->edges.begin(), r.cycle->edges.end(), forest[0]));
    }
    SUBCASE("seeded sweep at n = 24 with two forced edges") {
        std::mt19937_64 rng(2024);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Graph g = support::random_dense_graph(24, 14, 0.62, rng);
            Labeling f = Labeling::random(g.edge_count(), rng);
            // a random 2-edge linear forest
            std::vector<EdgeId> forest;
            while (forest.size() < 2) {
                EdgeId e = std::uniform_int_distribution<EdgeId>(0, g.edge_count() - 1)(rng);
                if (!forest.empty() && forest[0] == e) continue;
                std::vector<EdgeId> trial = forest;
                trial.push_back(e);
                if (is_linear_forest(g, trial)) forest = trial;
            }
            auto r = hamilton_with_forest(g, f, forest, 0.05, seed + 1);
            REQUIRE(r.status == SearchStatus::ok);
            check_hamilton_cycle(g, f, *r.cycle);
            for (EdgeId e : forest)
                CHECK(std::binary_search(r.cycle->edges.begin(), r.cycle->edges.end(), e));
        }
    }
    SUBCASE("non-linear-forest input is rejected") {
        Graph g = make_complete(5);
        Labeling f = Labeling::all_positive(g.edge_count());
        std::vector<EdgeId> star{*g.edge_between(0, 1), *g.edge_between(0, 2),
                                 *g.edge_between(0, 3)};
        CHECK_THROWS_AS(hamilton_with_forest(g, f, star, 0.1), std::invalid_argument);
    }
    SUBCASE("exhaustive fallback proves absence on small graphs") {
        Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        Labeling f = Labeling::all_positive(4);
        auto r = hamilton_with_forest(star, f, {}, 0.05, 1, SearchLimits{20, 0, 12});
        CHECK(r.status == SearchStatus::precondition_violation);
        CHECK_FALSE(r.cycle.has_value());
    }
}

TEST_CASE("monochromatic_path") {
    SUBCASE("dense single-sign graph yields a long path") {
        Graph g = make_complete(12);
        Labeling f = Labeling::all_negative(g.edge_count());
        std::vector<VertexId> all(12);
        std::iota(all.begin(), all.end(), 0);
        PathSearchOptions opts;
        opts.sign = -1;
        auto r = monochromatic_path(g, f, all, 0.5, opts);
        CHECK(r.hypotheses_ok);
        CHECK(static_cast<int>(r.order.size()) - 1 >= 6);
        CHECK(r.guarantee_met);
        for (EdgeId e : r.path.edges) CHECK(f.sign(e) == -1);
    }
    SUBCASE("achieved length is reported against the guarantee") {
        Graph g = make_complete(12);
        std::mt19937_64 rng(5);
        Labeling f = Labeling::random(g.edge_count(), rng);
        std::vector<VertexId> u_set{0, 1, 2, 3};
        PathSearchOptions opts;
        opts.sign = -1;
        opts.endpoints_in_set = true;
        auto r = monochromatic_path(g, f, u_set, 0.5, opts);
        // every edge meets the set and carries the requested sign
        std::set<VertexId> in_u(u_set.begin(), u_set.end());
        for (size_t i = 0; i + 1 < r.order.size(); ++i) {
            CHECK((in_u.count(r.order[i]) || in_u.count(r.order[i + 1])));
        }
        for (EdgeId e : r.path.edges) CHECK(f.sign(e) == -1);
        if (r.order.size() >= 2) {
            CHECK(in_u.count(r.order.front()) == 1);
            CHECK(in_u.count(r.order.back()) == 1);
        }
        CHECK(r.guarantee == 1); // floor(nu * gamma * n / 2) with nu = 1/3, gamma = 1/2
        CHECK(r.guarantee_met == (static_cast<int>(r.order.size()) - 1 >= r.guarantee));
    }
    SUBCASE("alternating variant alternates") {
        // bipartite-ish instance: U = {0,1,2}, rest only reachable across
        Graph g = make_complete(9);
        Labeling f = Labeling::all_positive(g.edge_count());
        std::vector<VertexId> u_set{0, 1, 2};
        PathSearchOptions opts;
        opts.alternating = true;
        auto r = monochromatic_path(g, f, u_set, 0.3, opts);
        std::set<VertexId> in_u(u_set.begin(), u_set.end());
        for (size_t i = 0; i + 1 < r.order.size(); ++i)
            CHECK(in_u.count(r.order[i]) != in_u.count(r.order[i + 1]));
    }
}

TEST_CASE("pick_companion_edges") {
    SUBCASE("abundant candidates on K_10") {
        Graph g = make_complete(10);
        Labeling f = Labeling::all_positive(g.edge_count());
        CompanionRequest req;
        req.path = {0, 1, 2};
        req.requirement.assign(3, requirements::in_neighborhood());
        auto pick = pick_companion_edges(g, f, req, 3);
        REQUIRE(pick.plan.has_value());
        const InsertionPlan& plan = *pick.plan;
        CHECK(plan.companions.size() == 3);
        CHECK(plan.closing_edge.has_value());
        CHECK(is_linear_forest(g, plan.forest_edges()));
        std::set<VertexId> on_path(plan.path.begin(), plan.path.end());
        for (EdgeId e : plan.forest_edges()) {
            auto [u, v] = g.edge(e);
            CHECK(on_path.count(u) == 0);
            CHECK(on_path.count(v) == 0);
        }
        // companions live in their vertex's neighborhood
        for (size_t i = 0; i < plan.path.size(); ++i) {
            auto [u, v] = g.edge(plan.companions[i]);
            CHECK(g.adjacent(plan.path[i], u));
            CHECK(g.adjacent(plan.path[i], v));
        }
        CHECK(g.adjacent(plan.closing_a, plan.path.front()));
        CHECK(g.adjacent(plan.closing_b, plan.path.back()));
    }
    SUBCASE("an unsatisfiable requirement names the stuck vertex") {
        Graph g = make_complete(8);
        Labeling f = Labeling::all_positive(g.edge_count()); // no negative edge anywhere
        CompanionRequest req;
        req.path = {0, 1};
        req.requirement = {requirements::in_neighborhood(),
                           requirements::edge_sign(g, f, -1)};
        auto pick = pick_companion_edges(g, f, req, 1);
        CHECK_FALSE(pick.plan.has_value());
        REQUIRE(pick.failed_vertex.has_value());
        CHECK(*pick.failed_vertex == 1);
    }
    SUBCASE("plans validate on random dense instances") {
        std::mt19937_64 rng(9);
        for (int trial = 0; trial < 30; ++trial) {
            Graph g = support::random_dense_graph(14, 9, 0.7, rng);
            Labeling f = Labeling::random(g.edge_count(), rng);
            CompanionRequest req;
            req.path = {0, 1, 2, 3};
            if (!g.adjacent(0, 1) || !g.adjacent(1, 2) || !g.adjacent(2, 3)) continue;
            req.requirement.assign(4, requirements::in_neighborhood());
            auto pick = pick_companion_edges(g, f, req, trial);
            if (!pick.plan) continue;
            CHECK(is_linear_forest(g, pick.plan->forest_edges()));
        }
    }
}

TEST_CASE("amplify") {
    SUBCASE("planted all-negative path on an otherwise positive K_12") {
        Graph g = make_complete(12);
        Labeling f = Labeling::all_positive(g.edge_count());
        std::vector<VertexId> path{0, 1, 2, 3};
        for (size_t i = 0; i + 1 < path.size(); ++i)
            f.set(*g.edge_between(path[i], path[i + 1]), -1);

        CompanionRequest req;
        req.path = path;
        req.requirement.assign(path.size(), requirements::in_signed_neighborhood(g, f, 1));
        auto pick = pick_companion_edges(g, f, req, 11);
        REQUIRE(pick.plan.has_value());
        auto amp = amplify(g, f, *pick.plan, 0.05, 11);
        REQUIRE(amp.result.has_value());
        check_hamilton_cycle(g, f, amp.result->whole_path);
        check_hamilton_cycle(g, f, amp.result->one_by_one);
        // H1 swallows the negative path, H2 gains +3 per inserted vertex
        const int L = static_cast<int>(path.size()) - 1;
        CHECK(amp.result->one_by_one.sum - amp.result->whole_path.sum >= 2 * L - 6);
        CHECK(std::abs(amp.result->chosen().sum) >= (L - 3) / 2);
    }
    SUBCASE("single-vertex path degenerates to one cycle") {
        Graph g = make_complete(8);
        Labeling f = Labeling::all_positive(g.edge_count());
        CompanionRequest req;
        req.path = {4};
        req.requirement = {requirements::in_neighborhood()};
        auto pick = pick_companion_edges(g, f, req, 2);
        REQUIRE(pick.plan.has_value());
        CHECK(pick.plan->closing_edge == pick.plan->companions[0]);
        auto amp = amplify(g, f, *pick.plan, 0.05, 2);
        REQUIRE(amp.result.has_value());
        CHECK(amp.result->whole_path.edges == amp.result->one_by_one.edges);
    }
    SUBCASE("bookkeeping identity on random instances") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 15; ++trial) {
            Graph g = support::random_dense_graph(16, 11, 0.75, rng);
            Labeling f = Labeling::random(g.edge_count(), rng);
            CompanionRequest req;
            req.path = {0, 1, 2};
            if (!g.adjacent(0, 1) || !g.adjacent(1, 2)) continue;
            req.requirement.assign(3, requirements::in_neighborhood());
            auto pick = pick_companion_edges(g, f, req, trial + 40);
            if (!pick.plan) continue;
            auto amp = amplify(g, f, *pick.plan, 0.05, trial + 40);
            if (!amp.result) continue;
            const auto& plan = *pick.plan;
            const auto& r = *amp.result;
            check_hamilton_cycle(g, f, r.whole_path);
            check_hamilton_cycle(g, f, r.one_by_one);
            // f(H2) - f(H1) = sum_v [f(av v)+f(v bv)-f(av bv)]
            //              - [f(ax)+f(by)+f(P)-f(ab)]
            int detours = 0;
            for (size_t i = 0; i < plan.path.size(); ++i) {
                auto [av, bv] = g.edge(plan.companions[i]);
                detours += f.sign(*g.edge_between(av, plan.path[i])) +
                           f.sign(*g.edge_between(plan.path[i], bv)) -
                           f.sign(plan.companions[i]);
            }
            int path_sum = 0;
            for (size_t i = 0; i + 1 < plan.path.size(); ++i)
                path_sum += f.sign(*g.edge_between(plan.path[i], plan.path[i + 1]));
            int splice = f.sign(*g.edge_between(plan.closing_a, plan.path.front())) +
                         f.sign(*g.edge_between(plan.path.back(), plan.closing_b)) + path_sum -
                         f.sign(*plan.closing_edge);
            CHECK(r.one_by_one.sum - r.whole_path.sum == detours - splice);
        }
    }
}

TEST_CASE("search_dense") {
    SUBCASE("all-positive labels reach discrepancy n") {
        Graph g = make_complete(10);
        Labeling f = Labeling::all_positive(g.edge_count());
        auto r = search_dense(g, f, 0.05, 1);
        check_hamilton_cycle(g, f, r.cycle);
        CHECK(r.achieved == 10);
    }
    SUBCASE("achieved never exceeds the exact optimum, and clears 1 when it can") {
        std::mt19937_64 rng(71);
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            int n = 8 + static_cast<int>(seed % 5);
            Graph g = support::random_dense_graph(n, static_cast<int>(0.8 * n) + 1, 0.85, rng);
            Labeling f = Labeling::random(g.edge_count(), rng);
            auto r = search_dense(g, f, 0.05, seed + 1);
            check_hamilton_cycle(g, f, r.cycle);
            auto exact = hamilton_extreme_values(g, f);
            REQUIRE(exact.has_value());
            int optimum = std::max(exact->first, -exact->second);
            CHECK(r.achieved <= optimum);
            if (optimum >= 2) CHECK(r.achieved >= 1);
        }
    }
    SUBCASE("a negative perfect matching drives the positive-neighborhood branch") {
        // every vertex is balanced at threshold 1, yet neighborhoods stay
        // locally positive
        Graph g = make_complete(16);
        Labeling f = Labeling::all_positive(g.edge_count());
        for (VertexId v = 0; v < 16; v += 2) f.set(*g.edge_between(v, v + 1), -1);
        auto r = search_dense(g, f, 0.2, 1);
        check_hamilton_cycle(g, f, r.cycle);
        CHECK(r.achieved >= 12);
        bool fired = false;
        for (const auto& line : r.trace)
            if (line.find("positive-neighborhood") != std::string::npos) fired = true;
        CHECK(fired);
    }
    SUBCASE("planted unbalanced vertices drive the two-way insertion") {
        Graph g = make_complete(16);
        std::mt19937_64 rng(8);
        Labeling f = Labeling::random(g.edge_count(), rng);
        for (VertexId v : {0, 1, 2, 3})
            for (const auto& entry : g.neighbors(v)) f.set(entry.edge, 1);
        auto r = search_dense(g, f, 0.2, 4);
        check_hamilton_cycle(g, f, r.cycle);
        CHECK(r.achieved >= 1);
        bool case2 = false;
        for (const auto& line : r.trace)
            if (line.find("case 2") != std::string::npos) case2 = true;
        CHECK(case2);
    }
    SUBCASE("the tight example comes back flagged") {
        auto km = make_complete_minus_clique(8);
        Labeling f = support::tight_example_labeling(km.graph, km.independent_set);
        auto r = search_dense(km.graph, f, 0.05, 3);
        check_hamilton_cycle(km.graph, f, r.cycle);
        CHECK(r.achieved == 0);
        CHECK(r.tight_example);
        CHECK(r.used_exact_fallback);
    }
}

TEST_CASE("multicolor_amplifier") {
    SUBCASE("empty set degrades to a plain cycle") {
        Graph g = make_complete(8);
        Labeling f = Labeling::all_positive(g.edge_count());
        auto r = multicolor_amplifier(g, f, {}, 1, 0.05, 5);
        REQUIRE(r.status == SearchStatus::ok);
        check_hamilton_cycle(g, f, *r.cycle);
    }
    SUBCASE("planted two-color vertices amplify away from the base") {
        Graph g = make_complete(14);
        std::mt19937_64 rng(15);
        Labeling f = Labeling::random(g.edge_count(), rng);
        auto colors = color_vertices(g, f, 1);
        std::vector<VertexId> m_set;
        for (VertexId v : colors.multi_colored()) {
            m_set.push_back(v);
            if (m_set.size() == 3) break;
        }
        if (m_set.size() == 3) {
            auto r = multicolor_amplifier(g, f, m_set, 1, 0.05, 15);
            REQUIRE(r.status == SearchStatus::ok);
            check_hamilton_cycle(g, f, *r.cycle);
            // the two sweep assemblies differ by at least 2 per vertex, so
            // the better one clears |M|
            CHECK(std::abs(r.cycle->sum) >= static_cast<int>(m_set.size()));
        }
    }
    SUBCASE("vertices must really be multi-colored") {
        Graph g = make_complete(6);
        Labeling f = Labeling::all_positive(g.edge_count()); // one color everywhere
        CHECK_THROWS_AS(multicolor_amplifier(g, f, {0}, 1, 0.05, 1), std::invalid_argument);
    }
}

TEST_CASE("the insertion case variants are plain requirement predicates") {
    // the five path-insertion variants differ only in the companion
    // requirements; each combination must be expressible and amplify into
    // valid cycles whenever a plan exists
    std::mt19937_64 rng(121);
    Graph g = make_complete(12);
    struct Variant {
        const char* name;
        std::function<EdgeRequirement(const Graph&, const Labeling&)> x_req, y_req;
    };
    const std::vector<Variant> variants = {
        {"negative path, dark-blue detours",
         [](const Graph& gg, const Labeling& ff) { return requirements::g_value(gg, ff, 3); },
         [](const Graph&, const Labeling&) { return requirements::in_neighborhood(); }},
        {"negative path, blue detours avoiding dark-red",
         [](const Graph& gg, const Labeling& ff) { return requirements::g_value(gg, ff, 1); },
         [](const Graph& gg, const Labeling& ff) { return requirements::g_value_not(gg, ff, -3); }},
        {"dark-blue on both groups",
         [](const Graph& gg, const Labeling& ff) { return requirements::g_value(gg, ff, 3); },
         [](const Graph& gg, const Labeling& ff) { return requirements::g_value(gg, ff, 3); }},
        {"dark-blue with blue companions",
         [](const Graph& gg, const Labeling& ff) { return requirements::g_value(gg, ff, 3); },
         [](const Graph& gg, const Labeling& ff) { return requirements::g_value(gg, ff, 1); }},
        {"positive path, red detours",
         [](const Graph& gg, const Labeling& ff) { return requirements::g_value(gg, ff, -1); },
         [](const Graph& gg, const Labeling& ff) { return requirements::g_value(gg, ff, -1); }},
    };
    for (const auto& variant : variants) {
        CAPTURE(variant.name);
        int planned = 0;
        for (int trial = 0; trial < 20 && planned == 0; ++trial) {
            Labeling f = Labeling::random(g.edge_count(), rng);
            CompanionRequest req;
            req.path = {0, 1, 2};
            req.requirement = {variant.x_req(g, f), variant.y_req(g, f), variant.x_req(g, f)};
            auto pick = pick_companion_edges(g, f, req, trial);
            if (!pick.plan) continue;
            ++planned;
            auto amp = amplify(g, f, *pick.plan, 0.05, trial);
            if (amp.result) {
                check_hamilton_cycle(g, f, amp.result->whole_path);
                check_hamilton_cycle(g, f, amp.result->one_by_one);
            }
        }
        CHECK(planned >= 1);
    }
}

TEST_CASE("sign equivariance of the dense search") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        Graph g = support::random_dense_graph(10, 9, 0.9, rng);
        Labeling f = Labeling::random(g.edge_count(), rng);
        int negatives = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e) negatives += f.sign(e) < 0;
        if (2 * negatives == g.edge_count()) continue; // canonicalization tie
        auto pos = search_dense(g, f, 0.05, 7);
        auto neg = search_dense(g, f.negated(), 0.05, 7);
        CHECK(pos.achieved == neg.achieved);
    }
}
