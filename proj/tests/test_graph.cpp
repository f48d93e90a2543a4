#include <doctest.h>

#include "fixtures.hpp"
#include "starfactor/graph.hpp"
#include "starfactor/oracle.hpp"

using namespace starfactor;

namespace {

// independent graph6 encoder for the round-trip oracle: builds the bit string
// with plain string arithmetic instead of the library's packing
std::string reference_graph6(const Graph& g) {
    std::string bits;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? '1' : '0');
    while (bits.size() % 6) bits.push_back('0');
    std::string out(1, static_cast<char>(63 + g.order()));
    for (size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v * 2 + (bits[i + b] == '1');
        out.push_back(static_cast<char>(63 + v));
    }
    return out;
}

}  // namespace

TEST_CASE("graph6 decodes the documented 5-vertex string") {
    Graph g = parse_graph6("D?{");
    CHECK(g.order() == 5);
    CHECK(emit_graph6(g) == "D?{");
}

TEST_CASE("graph6 single vertex") {
    Graph g = parse_graph6("@");
    CHECK(g.order() == 1);
    CHECK(g.size() == 0);
}

TEST_CASE("graph6 round-trips against an independent encoder") {
    Graph c5 = fixtures::cycle(5);
    std::string enc = reference_graph6(c5);
    Graph back = parse_graph6(enc);
    CHECK(back.order() == 5);
    for (int v = 0; v < 5; ++v) CHECK(back.degree(v) == 2);
    CHECK(emit_graph6(c5) == enc);

    for (const Graph& g : enumerate_graphs({5, false, true})) {
        CHECK(emit_graph6(g) == reference_graph6(g));
        Graph rt = parse_graph6(emit_graph6(g));
        CHECK(rt.order() == g.order());
        CHECK(rt.edges() == g.edges());
    }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_WITH_AS(parse_graph6("D?"), doctest::Contains("truncated"), Error);
    CHECK_THROWS_WITH_AS(parse_graph6(std::string("D") + char(20) + "{"), doctest::Contains("out of range"), Error);
    CHECK_THROWS_WITH_AS(parse_graph6("D?{?"), doctest::Contains("trailing garbage"), Error);
    CHECK_THROWS_WITH_AS(parse_graph6(">>bogus<<D?{"), doctest::Contains("header"), Error);
    CHECK(parse_graph6(">>graph6<<D?{").order() == 5);
}

TEST_CASE("edge list parsing") {
    Graph p3 = parse_edge_list("0 1\n1 2\n");
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);

    Graph g = parse_edge_list("n 4\n0 1\n");
    CHECK(g.order() == 4);
    CHECK(g.size() == 1);
    CHECK(g.degree(2) == 0);
    CHECK(g.degree(3) == 0);

    CHECK_THROWS_WITH_AS(parse_edge_list("0 0\n"), doctest::Contains("self-loop"), Error);
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n1 0\n"), doctest::Contains("duplicate"), Error);
    CHECK_THROWS_WITH_AS(parse_edge_list("0 x\n"), doctest::Contains("non-integer"), Error);
}

TEST_CASE("dimacs reader") {
    Graph g = parse_dimacs("c comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(2, 3));
}

TEST_CASE("induced subgraph and vertex deletion") {
    Graph c5 = fixtures::cycle(5);
    auto full = induced_subgraph(c5, VertexSet(5, {0, 1, 2, 3, 4}));
    CHECK(full.graph.edges() == c5.edges());

    Graph k4 = fixtures::complete(4);
    auto tri = induced_subgraph(k4, VertexSet(4, {0, 1, 2}));
    CHECK(tri.graph.order() == 3);
    CHECK(tri.graph.size() == 3);

    // one pentagon layer of the Petersen graph induces a 5-cycle
    auto layer = induced_subgraph(fixtures::petersen(), VertexSet(10, {0, 1, 2, 3, 4}));
    CHECK(layer.graph.size() == 5);
    for (int v = 0; v < 5; ++v) CHECK(layer.graph.degree(v) == 2);

    auto p3mid = delete_vertices(fixtures::path(3), VertexSet(3, {1}));
    CHECK(p3mid.graph.order() == 2);
    CHECK(p3mid.graph.size() == 0);

    auto c5del = delete_vertices(c5, VertexSet(5, {0}));
    CHECK(c5del.graph.order() == 4);
    CHECK(c5del.graph.size() == 3);  // P4

    auto starless = delete_vertices(fixtures::star(3), VertexSet(4, {0}));
    CHECK(starless.graph.size() == 0);
}

TEST_CASE("isolated vertex counting") {
    CHECK(isolated_count(fixtures::star(3), VertexSet(4, {0})).count == 3);
    CHECK(isolated_count(fixtures::cycle(5), VertexSet(5, {2})).count == 0);
    // the double star loses all four leaves when both centers go
    CHECK(isolated_count(fixtures::double_star6(), VertexSet(6, {0, 1})).count == 4);
}

TEST_CASE("edge contraction") {
    auto k3 = contract_edge(fixtures::complete(3), Edge(0, 1));
    CHECK(k3.graph.order() == 2);
    CHECK(k3.graph.size() == 2);  // double edge

    auto p3 = contract_edge(fixtures::path(3), Edge(0, 1));
    CHECK(p3.graph.order() == 2);
    CHECK(p3.graph.size() == 1);

    // contracting the center edge of the double star leaves a 4-leaf center
    auto ds = contract_edge(fixtures::double_star6(), Edge(0, 1));
    CHECK(ds.graph.order() == 5);
    CHECK(ds.graph.degree(ds.merged) == 4);

    CHECK_THROWS_AS(contract_edge(fixtures::path(3), Edge(0, 2)), Error);
}

TEST_CASE("contraction drops exactly one edge of total degree") {
    for (const Graph& g : enumerate_graphs({5, true, true})) {
        if (g.size() == 0) continue;
        long before = 0;
        for (int v = 0; v < g.order(); ++v) before += g.degree(v);
        auto res = contract_edge(g, g.edges().front());
        long after = 0;
        for (int v = 0; v < res.graph.order(); ++v) after += res.graph.degree(v);
        CHECK(after == before - 2);
    }
}

TEST_CASE("connected components") {
    CHECK(connected_components(fixtures::cycle(5)).size() == 1);
    Graph two_k2 = Graph::from_edges(4, {Edge(0, 1), Edge(2, 3)});
    CHECK(connected_components(two_k2).size() == 2);
    auto leaves = delete_vertices(fixtures::star(3), VertexSet(4, {0})).graph;
    CHECK(connected_components(leaves).size() == 3);
}

TEST_CASE("iso partition identity over the corpus") {
    for (const Graph& g : enumerate_graphs({6, false, true})) {
        VertexSet s(g.order());
        for (int v = 0; v < g.order(); v += 2) s.set(v);
        auto iso = isolated_count(g, s);
        int non_isolated = g.order() - s.count() - iso.count;
        CHECK(iso.count + non_isolated + s.count() == g.order());
    }
}

TEST_CASE("empty graph is legal") {
    Graph g = Graph::from_edges(0, {});
    CHECK(g.order() == 0);
    CHECK(connected_components(g).empty());
    CHECK(emit_graph6(g) == "?");
    CHECK(parse_graph6("?").order() == 0);
}
