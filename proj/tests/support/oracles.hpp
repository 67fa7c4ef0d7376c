#pragma once

#include <map>
#include <vector>

#include "ebu/graph.hpp"
#include "ebu/rational.hpp"

namespace ebu::testsupport {

/// Independent oracle for edge betweenness: enumerates every shortest path
/// explicitly by DFS over the BFS distance field and tallies, per ordered
/// pair, the fraction of paths through each edge. Exponential, for small
/// graphs only; shares no code with the dependency-accumulation route.
std::map<EdgeId, Rational> brute_edge_betweenness(const Graph& g);

/// Sum of d(x,y) over ordered connected pairs.
BigInt ordered_pair_distance_sum(const Graph& g);

/// All automorphisms by raw permutation search (n <= 9 or so).
std::vector<std::vector<Vertex>> brute_automorphisms(const Graph& g);

/// Isomorphism by permutation search with degree pruning (small n).
bool brute_isomorphic(const Graph& g, const Graph& h);

/// Deterministic random connected graph on n vertices: a random spanning
/// tree plus each remaining pair independently with probability p_percent.
Graph random_connected_graph(int n, int p_percent, unsigned long long seed);

}  // namespace ebu::testsupport
