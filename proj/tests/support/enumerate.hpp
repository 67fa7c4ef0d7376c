#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ebu/graph.hpp"

namespace ebu::testsupport {

/// All connected graphs on exactly n vertices, one representative per
/// isomorphism class, in a deterministic order. Canonical-augmentation
/// generation: children are produced by attaching a new vertex to one
/// representative neighborhood per Aut(parent) orbit, and kept only when the
/// new vertex lands in the orbit of the canonical deletion vertex.
std::vector<Graph> connected_graphs(int n, int threads = 1);

/// Cumulative variant: all connected graphs with 1 <= vertices <= n_max.
std::vector<Graph> connected_graphs_up_to(int n_max, int threads = 1);

/// Streaming variant for orders too large to hold as Graph objects: writes
/// the graph6 line of every connected n-vertex graph to `out` (deterministic
/// order, independent of the thread count) and returns how many were written.
long long stream_connected_graphs(int n, int threads, std::ostream& out);

/// Non-cut vertices (deleting one keeps the graph connected).
std::vector<Vertex> non_cut_vertices(const Graph& g);

}  // namespace ebu::testsupport
