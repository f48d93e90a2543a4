#include <doctest.h>

#include "fixtures.hpp"
#include "starfactor/matching.hpp"
#include "starfactor/oracle.hpp"

using namespace starfactor;

TEST_CASE("maximum matching on fixtures") {
    CHECK(maximum_matching(fixtures::cycle(5)).size == 2);
    CHECK(maximum_matching(fixtures::star(3)).size == 1);
    Matching pm = maximum_matching(fixtures::petersen());
    CHECK(pm.size == 5);
    for (const Edge& e : pm.edges()) CHECK(fixtures::petersen().adjacent(e.u, e.v));
}

TEST_CASE("matching invariants: mate is a fixed-point-free involution on its support") {
    for (const Graph& g : enumerate_graphs({6, false, true})) {
        Matching m = maximum_matching(g);
        for (int v = 0; v < g.order(); ++v)
            if (m.mate[v] != -1) {
                CHECK(m.mate[v] != v);
                CHECK(m.mate[m.mate[v]] == v);
                CHECK(g.adjacent(v, m.mate[v]));
            }
    }
}

TEST_CASE("blossom agrees with the brute-force oracle") {
    for (const Graph& g : enumerate_graphs({7, false, true})) {
        if (g.size() > 24) continue;
        CHECK(maximum_matching(g).size == brute_max_matching(g));
    }
    CHECK(brute_max_matching(fixtures::petersen()) == 5);
}

TEST_CASE("deficiency") {
    CHECK(deficiency(fixtures::cycle(5)) == 1);
    CHECK(deficiency(fixtures::star(3)) == 2);
    CHECK(deficiency(fixtures::path(3)) == 1);
}

TEST_CASE("bipartite matching maximizes cardinality then weight") {
    BipartiteInstance inst;
    inst.n_left = 1;
    inst.n_right = 1;
    inst.arcs = {{0, 0, 5}};
    auto m = bipartite_max_weight_matching(inst, false);
    CHECK(m.size == 1);
    CHECK(m.weight == 5);

    inst.n_left = 2;
    inst.n_right = 2;
    inst.arcs = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}};
    m = bipartite_max_weight_matching(inst, true);
    CHECK(m.size == 2);
    CHECK(m.weight == 2);

    inst.n_left = 1;
    inst.n_right = 2;
    inst.arcs = {{0, 0, 0}, {0, 1, 3}};
    m = bipartite_max_weight_matching(inst, true);
    CHECK(m.weight == 3);
    CHECK(m.right_of_left[0] == 1);

    inst.n_left = 2;
    inst.n_right = 1;
    inst.arcs = {{0, 0, 1}, {1, 0, 1}};
    CHECK_THROWS_AS(bipartite_max_weight_matching(inst, true), Error);
}

TEST_CASE("degree-constrained factors on fixtures") {
    // P3 with bounds [1,2] is realized by the path itself
    MultiGraph p3 = MultiGraph::from_graph(fixtures::path(3));
    auto f = gf_factor(p3, DegreeBounds::uniform(3, 1, 2));
    REQUIRE(f.has_value());
    CHECK(f->size() == 2);

    // K2 has no 2-regular spanning subgraph
    MultiGraph k2 = MultiGraph::from_graph(fixtures::complete(2));
    CHECK_FALSE(gf_factor(k2, DegreeBounds::uniform(2, 2, 2)).has_value());

    // contracting the double star's center edge kills the (g',f')-factor
    auto cr = contract_edge(fixtures::double_star6(), Edge(0, 1));
    DegreeBounds b = DegreeBounds::uniform(cr.graph.order(), 1, 2);
    b.g[cr.merged] = 0;
    b.f[cr.merged] = 1;
    CHECK_FALSE(gf_factor(cr.graph, b).has_value());
}

TEST_CASE("two-factor existence") {
    for (int n = 3; n <= 9; ++n) CHECK(two_factor_exists(fixtures::cycle(n)));
    CHECK(two_factor_exists(fixtures::complete(4)));
    CHECK_FALSE(two_factor_exists(fixtures::star(3)));
    CHECK_FALSE(two_factor_exists(fixtures::path(4)));
}

TEST_CASE("gamma evaluation matches hand computations") {
    // S = T = empty with strict bounds everywhere: gamma = 0
    MultiGraph p3 = MultiGraph::from_graph(fixtures::path(3));
    CHECK(evaluate_gamma(p3, DegreeBounds::uniform(3, 1, 2), VertexSet(3), VertexSet(3)) == 0);

    // K2 with g = f = 2: the single component has even f-sum, so q* = 0
    MultiGraph k2 = MultiGraph::from_graph(fixtures::complete(2));
    CHECK(evaluate_gamma(k2, DegreeBounds::uniform(2, 2, 2), VertexSet(2), VertexSet(2)) == 0);
    // ... but T = {0} exposes the deficiency: (1 - 2) - q*({1} component, odd) = -2
    CHECK(evaluate_gamma(k2, DegreeBounds::uniform(2, 2, 2), VertexSet(2), VertexSet(2, {0})) == -2);

    // P3 with S = {middle}, T = {ends}: 2 + 0 + 0 - 2 - 0 = 0
    CHECK(evaluate_gamma(p3, DegreeBounds::uniform(3, 1, 2), VertexSet(3, {1}), VertexSet(3, {0, 2})) == 0);

    CHECK_THROWS_AS(evaluate_gamma(p3, DegreeBounds::uniform(3, 1, 2), VertexSet(3, {0}), VertexSet(3, {0})), Error);
}

TEST_CASE("gadget decision equals the gamma criterion exhaustively") {
    // both directions of the (g,f)-factor criterion on all small graphs
    for (const Graph& g : enumerate_graphs({5, false, true})) {
        MultiGraph mg = MultiGraph::from_graph(g);
        const int fams[4][2] = {{1, 1}, {1, 2}, {2, 2}, {1, 3}};
        for (auto& fam : fams) {
            DegreeBounds b = DegreeBounds::uniform(g.order(), fam[0], fam[1]);
            CHECK(gf_factor_exists(mg, b) == (brute_gamma_min(mg, b) >= 0));
        }
    }
}

TEST_CASE("gf witness respects the bounds") {
    for (const Graph& g : enumerate_graphs({6, true, true})) {
        MultiGraph mg = MultiGraph::from_graph(g);
        DegreeBounds b = DegreeBounds::uniform(g.order(), 1, 2);
        auto f = gf_factor(mg, b);
        if (!f) continue;
        std::vector<int> deg(g.order(), 0);
        for (int id : *f) {
            deg[mg.edges()[id].u]++;
            deg[mg.edges()[id].v]++;
        }
        for (int v = 0; v < g.order(); ++v) {
            CHECK(deg[v] >= 1);
            CHECK(deg[v] <= 2);
        }
    }
}
