#include <functional>

#include "doctest.h"

#include "ebu/bfs.hpp"
#include "ebu/class_graphs.hpp"
#include "ebu/families.hpp"
#include "ebu/graph.hpp"

#include "../support/oracles.hpp"

using namespace ebu;

TEST_CASE("circulant construction") {
    Graph g = circulant(CirculantSpec(15, {1, 6}));
    CHECK(g.vertex_count() == 15);
    CHECK(g.edge_count() == 30);
    for (Vertex v = 0; v < 15; ++v) CHECK(g.degree(v) == 4);

    Graph c5 = circulant(CirculantSpec(5, {1}));
    CHECK(c5.edge_count() == 5);
    for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    CHECK(circulant(CirculantSpec(33, {1, 12})).edge_count() == 66);

    // chord k/2 contributes a perfect matching (degree 1 on that chord)
    Graph c6 = circulant(CirculantSpec(6, {1, 3}));
    for (Vertex v = 0; v < 6; ++v) CHECK(c6.degree(v) == 3);

    CHECK_THROWS_AS(CirculantSpec(10, {0}), std::invalid_argument);
    CHECK_THROWS_AS(CirculantSpec(10, {6}), std::invalid_argument);
    CHECK_THROWS_AS(CirculantSpec(10, {2, 2}), std::invalid_argument);
}

TEST_CASE("circulants carry the rotation automorphism") {
    for (auto spec : {CirculantSpec(15, {1, 6}), CirculantSpec(11, {2, 4}), CirculantSpec(8, {1, 4})}) {
        Graph g = circulant(spec);
        g.validate();
        const int k = spec.order;
        for (Vertex u = 0; u < k; ++u)
            for (Vertex v : g.neighbors(u)) CHECK(g.has_edge((u + 1) % k, (v + 1) % k));
    }
}

TEST_CASE("every constructed family passes the representation validator") {
    circulant(CirculantSpec(21, {1, 6})).validate();
    family(FamilyKind::Complete, {7}).validate();
    family(FamilyKind::Cycle, {9}).validate();
    family(FamilyKind::Path, {6}).validate();
    family(FamilyKind::CompleteBipartite, {3, 5}).validate();
    family(FamilyKind::CompleteMinusPerfectMatching, {8}).validate();
    family(FamilyKind::ComplementOfCirculant, {11, 1, 2}).validate();
}

TEST_CASE("standard families") {
    CHECK(family(FamilyKind::CompleteBipartite, {2, 3}).edge_count() == 6);
    CHECK(family(FamilyKind::Complete, {5}).edge_count() == 10);
    CHECK(family(FamilyKind::Cycle, {7}).edge_count() == 7);
    CHECK(family(FamilyKind::Path, {5}).edge_count() == 4);

    // K4 minus a perfect matching is the 4-cycle
    Graph k4mm = family(FamilyKind::CompleteMinusPerfectMatching, {4});
    CHECK(k4mm.edge_count() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(k4mm.degree(v) == 2);

    Graph cc = family(FamilyKind::ComplementOfCirculant, {11, 1});
    CHECK(cc.edge_count() == 44);
    for (Vertex v = 0; v < 11; ++v) CHECK(cc.degree(v) == 8);

    CHECK_THROWS_AS(family(FamilyKind::CompleteMinusPerfectMatching, {5}), std::invalid_argument);
    CHECK_THROWS_AS(family(FamilyKind::Complete, {0}), std::invalid_argument);
    CHECK_THROWS_AS(family(FamilyKind::CompleteBipartite, {2}), std::invalid_argument);
    CHECK(parse_family_kind("complete_bipartite") == FamilyKind::CompleteBipartite);
    CHECK_THROWS_AS(parse_family_kind("nonsense"), std::invalid_argument);
}

TEST_CASE("bfs_count on known graphs") {
    Graph c4 = family(FamilyKind::Cycle, {4});
    BfsResult r = bfs_count(c4, 0);
    CHECK(r.dist == std::vector<int>{0, 1, 2, 1});
    CHECK(r.sigma == std::vector<BigInt>{1, 1, 2, 1});
    CHECK(r.order == std::vector<Vertex>{0, 1, 3, 2});

    Graph p3 = family(FamilyKind::Path, {3});
    BfsResult rp = bfs_count(p3, 0);
    CHECK(rp.dist == std::vector<int>{0, 1, 2});
    CHECK(rp.sigma == std::vector<BigInt>{1, 1, 1});

    CHECK_THROWS_AS(bfs_count(p3, 3), std::invalid_argument);
}

TEST_CASE("bfs sigma equals explicit path enumeration on C15(1,6)") {
    Graph g = circulant(CirculantSpec(15, {1, 6}));
    BfsResult r = bfs_count(g, 0);
    int max_dist = 0;
    for (int d : r.dist) max_dist = std::max(max_dist, d);
    CHECK(max_dist == 3);
    // count shortest 0->y paths explicitly and compare with sigma
    for (Vertex y = 1; y < 15; ++y) {
        long long count = 0;
        std::vector<std::pair<Vertex, int>> stack{{0, 0}};
        std::vector<Vertex> path{0};
        // simple DFS along strictly increasing BFS depth
        std::function<void(Vertex)> walk = [&](Vertex v) {
            if (v == y) { ++count; return; }
            for (Vertex w : g.neighbors(v))
                if (r.dist[static_cast<size_t>(w)] == r.dist[static_cast<size_t>(v)] + 1 &&
                    r.dist[static_cast<size_t>(w)] <= r.dist[static_cast<size_t>(y)])
                    walk(w);
        };
        walk(0);
        CHECK(BigInt(count) == r.sigma[static_cast<size_t>(y)]);
    }
}

TEST_CASE("bfs invariants on random graphs") {
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testsupport::random_connected_graph(3 + trial % 9, 25, 1000 + trial);
        for (Vertex s = 0; s < g.vertex_count(); s += 2) {
            BfsResult r = bfs_count(g, s);
            CHECK(r.dist[static_cast<size_t>(s)] == 0);
            CHECK(r.sigma[static_cast<size_t>(s)] == 1);
            for (Vertex u = 0; u < g.vertex_count(); ++u) {
                for (Vertex v : g.neighbors(u))
                    CHECK(std::abs(r.dist[static_cast<size_t>(u)] - r.dist[static_cast<size_t>(v)]) <= 1);
                if (r.dist[static_cast<size_t>(u)] > 0) {
                    BigInt sum = 0;
                    for (Vertex w : g.neighbors(u))
                        if (r.dist[static_cast<size_t>(w)] == r.dist[static_cast<size_t>(u)] - 1)
                            sum += r.sigma[static_cast<size_t>(w)];
                    CHECK(sum == r.sigma[static_cast<size_t>(u)]);
                }
            }
        }
    }
}

TEST_CASE("shortest path edge support") {
    Graph c4 = family(FamilyKind::Cycle, {4});
    CHECK(shortest_path_edge_support(c4, 0).size() == 4);

    Graph k3 = family(FamilyKind::Complete, {3});
    std::set<EdgeId> sup = shortest_path_edge_support(k3, 0);
    CHECK(sup == std::set<EdgeId>{EdgeId(0, 1), EdgeId(0, 2)});

    // C33(1,12) from source 1 (label) = vertex 0: complement is the predicted six
    Graph g = circulant(CirculantSpec(33, {1, 12}));
    std::set<EdgeId> support = shortest_path_edge_support(g, 0);
    CHECK(support.size() == 60);
    std::set<EdgeId> complement;
    for (const EdgeId& e : g.edges())
        if (!support.count(e)) complement.insert(e);
    std::set<EdgeId> predicted;
    for (const EdgeId& e : predicted_unused_edges(ClassId(1, 2), 1).edges)
        predicted.emplace(e.u - 1, e.v - 1);
    CHECK(complement == predicted);
}
