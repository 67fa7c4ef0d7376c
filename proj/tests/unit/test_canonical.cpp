#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "ebu/canonical.hpp"
#include "ebu/families.hpp"
#include "ebu/graph.hpp"

#include "../support/enumerate.hpp"
#include "../support/oracles.hpp"

using namespace ebu;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    Graph out(g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) out.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return out;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

// order of the group generated by the discovered generators, by closure
size_t generated_group_order(int n, const std::vector<std::vector<Vertex>>& gens) {
    std::set<std::vector<Vertex>> group;
    std::vector<Vertex> id(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)] = i;
    group.insert(id);
    std::vector<std::vector<Vertex>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<Vertex>> next;
        for (const auto& p : frontier) {
            for (const auto& g : gens) {
                std::vector<Vertex> q(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i)
                    q[static_cast<size_t>(i)] = g[static_cast<size_t>(p[static_cast<size_t>(i)])];
                if (group.insert(q).second) next.push_back(std::move(q));
            }
        }
        frontier = std::move(next);
    }
    return group.size();
}

}  // namespace

TEST_CASE("canonical bytes identify isomorphism classes") {
    // the 5-cycle relabeled along 0-2-4-1-3
    Graph c5 = family(FamilyKind::Cycle, {5});
    Graph walked(5);
    walked.add_edge(0, 2);
    walked.add_edge(2, 4);
    walked.add_edge(4, 1);
    walked.add_edge(1, 3);
    walked.add_edge(3, 0);
    CHECK(canonical_form(c5).canonical_bytes == canonical_form(walked).canonical_bytes);

    CHECK(canonical_form(family(FamilyKind::Cycle, {6})).canonical_bytes !=
          canonical_form(family(FamilyKind::CompleteBipartite, {3, 3})).canonical_bytes);

    CHECK(canonical_form(circulant(CirculantSpec(15, {1, 2}))).canonical_bytes ==
          canonical_form(circulant(CirculantSpec(15, {1, 7}))).canonical_bytes);
}

TEST_CASE("are_isomorphic") {
    Graph g = testsupport::random_connected_graph(9, 40, 123);
    CHECK(are_isomorphic(g, g));

    // K4 minus an edge vs C4 plus a chord: both are the diamond
    Graph k4e = family(FamilyKind::Complete, {4}).without_edge(EdgeId(0, 1));
    Graph c4chord = family(FamilyKind::Cycle, {4});
    c4chord.add_edge(0, 2);
    CHECK(are_isomorphic(k4e, c4chord));

    CHECK_FALSE(are_isomorphic(family(FamilyKind::Path, {4}), family(FamilyKind::Cycle, {4})));
    CHECK_FALSE(are_isomorphic(family(FamilyKind::Path, {3}), family(FamilyKind::Path, {4})));
}

TEST_CASE("canonical form is invariant under 500 random relabelings") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    while (checked < 500) {
        int n = 4 + static_cast<int>(rng() % 7);
        Graph g = testsupport::random_connected_graph(n, 20 + static_cast<int>(rng() % 60),
                                                      rng());
        std::string bytes = canonical_form(g).canonical_bytes;
        std::vector<Vertex> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(relabel(g, perm)).canonical_bytes == bytes);
        ++checked;
    }
}

TEST_CASE("every returned generator is an automorphism") {
    for (const Graph& g : {petersen(), circulant(CirculantSpec(15, {1, 6})),
                           testsupport::random_connected_graph(10, 35, 99)}) {
        CanonicalLabel label = canonical_form(g);
        for (const auto& gen : label.automorphism_generators)
            for (Vertex u = 0; u < g.vertex_count(); ++u)
                for (Vertex v : g.neighbors(u))
                    CHECK(g.has_edge(gen[static_cast<size_t>(u)], gen[static_cast<size_t>(v)]));
    }
}

TEST_CASE("discovered generators generate the full automorphism group") {
    // brute-force group order on every connected graph with at most 6 vertices
    for (const Graph& g : testsupport::connected_graphs_up_to(6)) {
        CanonicalLabel label = canonical_form(g);
        size_t brute = testsupport::brute_automorphisms(g).size();
        CHECK(generated_group_order(g.vertex_count(), label.automorphism_generators) == brute);
    }
    // and the Petersen graph's order-120 group
    CanonicalLabel label = canonical_form(petersen());
    CHECK(generated_group_order(10, label.automorphism_generators) == 120);
    CHECK(label.orbit_count == 1);
}

TEST_CASE("colored canonical form separates color classes") {
    Graph p3 = family(FamilyKind::Path, {3});
    std::string end0 = canonical_form(p3, {0, 1, 1}).canonical_bytes;
    std::string end2 = canonical_form(p3, {1, 1, 0}).canonical_bytes;
    std::string mid = canonical_form(p3, {1, 0, 1}).canonical_bytes;
    CHECK(end0 == end2);  // the two leaves are equivalent
    CHECK(end0 != mid);   // the center is not

    // the individualization formulation of vertex transitivity
    Graph c6 = family(FamilyKind::Cycle, {6});
    std::string base = canonical_form(c6, {0, 1, 1, 1, 1, 1}).canonical_bytes;
    for (int i = 1; i < 6; ++i) {
        std::vector<int> colors(6, 1);
        colors[static_cast<size_t>(i)] = 0;
        CHECK(canonical_form(c6, colors).canonical_bytes == base);
    }
}

TEST_CASE("vertex limit enforced") {
    CHECK_THROWS_AS(canonical_form(Graph(129)), std::invalid_argument);
}
