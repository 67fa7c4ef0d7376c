#pragma once

#include <optional>
#include <vector>

#include "ebu/canonical.hpp"
#include "ebu/graph.hpp"

namespace ebu {

/// Deletion characterization: G is edge-transitive iff G-e1 and G-e2 are
/// isomorphic for every pair of edges, decided by grouping the canonical
/// forms of all single-edge deletions. Throws on an edgeless graph.
bool is_edge_transitive(const Graph& g);

/// Number of isomorphism classes among the single-edge-deleted graphs
/// (1 iff edge-transitive).
int deletion_edge_class_count(const Graph& g);

/// Edge orbits under the generated automorphism group; the cross-check
/// route for edge transitivity.
std::vector<int> edge_orbits(const Graph& g, const CanonicalLabel& label);
bool is_edge_transitive_via_orbits(const Graph& g);

/// True iff the automorphism group acts transitively on vertices (vertex 0's
/// orbit under the discovered generators is all of V).
bool is_vertex_transitive(const Graph& g);

/// Intersection-array check straight from per-source BFS layers: for every
/// vertex at distance i from every source, the neighbor counts one layer
/// down (c_i) and one layer up (b_i) must depend only on i.
struct DistanceRegularity {
    bool distance_regular = false;
    std::vector<int> b;  // b_0 .. b_{d-1}, meaningful when distance_regular
    std::vector<int> c;  // c_1 .. c_d
};

/// Throws on a disconnected graph.
DistanceRegularity distance_regularity(const Graph& g);
bool is_distance_regular(const Graph& g);

}  // namespace ebu
