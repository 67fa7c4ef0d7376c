#pragma once

#include <set>
#include <vector>

#include "ebu/graph.hpp"
#include "ebu/rational.hpp"

namespace ebu {

/// Single-source BFS with exact shortest-path counting.
struct BfsResult {
    Vertex source = 0;
    std::vector<int> dist;       // -1 for unreachable
    std::vector<BigInt> sigma;   // number of shortest source->v paths, exact
    std::vector<Vertex> order;   // reachable vertices in dequeue order
};

/// Neighbors are enqueued in ascending id order, so `order` is deterministic.
BfsResult bfs_count(const Graph& g, Vertex source);

/// Edges lying on at least one shortest path from s: exactly those whose
/// endpoint distances from s differ by one (both endpoints reachable).
std::set<EdgeId> shortest_path_edge_support(const Graph& g, Vertex s);

}  // namespace ebu
