#include <sstream>

#include "doctest.h"

#include "ebu/families.hpp"
#include "ebu/graph.hpp"
#include "ebu/graph6.hpp"

#include "../support/enumerate.hpp"

using namespace ebu;

TEST_CASE("graph invariants") {
    Graph g(4);
    g.add_edge(2, 0);
    g.add_edge(0, 1);
    g.add_edge(3, 0);
    CHECK(g.edge_count() == 3);
    CHECK(g.neighbors(0) == std::vector<Vertex>{1, 2, 3});
    CHECK(g.has_edge(3, 0));
    CHECK_FALSE(g.has_edge(1, 2));
    g.validate();
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 7), std::invalid_argument);
}

TEST_CASE("complement and edge removal") {
    Graph p3 = family(FamilyKind::Path, {3});
    Graph comp = p3.complement();
    CHECK(comp.edge_count() == 1);
    CHECK(comp.has_edge(0, 2));
    Graph no_mid = p3.without_edge(EdgeId(1, 2));
    CHECK(no_mid.edge_count() == 1);
    CHECK_THROWS_AS(p3.without_edge(EdgeId(0, 2)), std::invalid_argument);
}

TEST_CASE("graph6 known encodings") {
    CHECK(parse_graph6("A_").edge_count() == 1);   // K2
    CHECK(parse_graph6("A_").vertex_count() == 2);
    Graph k3 = parse_graph6("Bw");
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    Graph e2 = parse_graph6("A?");
    CHECK(e2.vertex_count() == 2);
    CHECK(e2.edge_count() == 0);
    CHECK(write_graph6(k3) == "Bw");
    CHECK(write_graph6(family(FamilyKind::Path, {3})) == "Bg");
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);       // truncated bits
    CHECK_THROWS_AS(parse_graph6("Bw "), std::invalid_argument);     // trailing garbage
    CHECK_THROWS_AS(parse_graph6("B\x01"), std::invalid_argument);   // non-printable
    CHECK_THROWS_AS(parse_graph6("Bwx"), std::invalid_argument);     // extra byte
}

TEST_CASE("graph6 header tolerated and stream reading") {
    Graph g = parse_graph6(">>graph6<<Bw");
    CHECK(g.edge_count() == 3);
    std::istringstream in(">>graph6<<A_\n\nBw\n");
    CHECK(next_graph6_line(in) == "A_");
    CHECK(next_graph6_line(in) == "Bw");
    CHECK_FALSE(next_graph6_line(in).has_value());
}

TEST_CASE("graph6 long form for n > 62") {
    Graph big(100);
    big.add_edge(0, 99);
    Graph back = parse_graph6(write_graph6(big));
    CHECK(back.vertex_count() == 100);
    CHECK(back.has_edge(0, 99));
}

TEST_CASE("graph6 round trip over all 996 connected graphs up to 7 vertices") {
    for (const Graph& g : testsupport::connected_graphs_up_to(7)) {
        Graph back = parse_graph6(write_graph6(g));
        CHECK(back == g);
        back.validate();
    }
}

TEST_CASE("diameter and connectivity") {
    CHECK(diameter(family(FamilyKind::Complete, {5})).diameter == 1);
    CHECK(diameter(family(FamilyKind::Complete, {5})).connected);
    CHECK(diameter(circulant(CirculantSpec(15, {1, 6}))).diameter == 3);
    Graph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    CHECK_FALSE(diameter(two_edges).connected);
    CHECK_FALSE(is_connected(two_edges));
    CHECK(diameter(two_edges).diameter == 1);  // max over components
    CHECK_THROWS_AS(diameter(Graph(0)), std::invalid_argument);
}

TEST_CASE("digest depends on the labeled graph") {
    Graph p3 = family(FamilyKind::Path, {3});
    Graph other(3);
    other.add_edge(0, 1);
    other.add_edge(0, 2);
    CHECK(graph_digest(p3) != graph_digest(other));
    CHECK(graph_digest(p3) == graph_digest(family(FamilyKind::Path, {3})));
}
