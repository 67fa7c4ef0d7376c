#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ebu/families.hpp"
#include "ebu/graph.hpp"
#include "ebu/rational.hpp"

namespace ebu {

/// Per-edge exact edge betweenness centrality, plus the uniformity verdict.
///
/// Convention: B'(e) sums sigma_xy(e)/sigma_xy over *ordered* pairs (x,y),
/// so each unordered pair counts twice and every edge gets a contribution
/// of 2 from its own endpoints. Pairs with no connecting path are skipped.
struct EdgeCentralityReport {
    std::string graph_hash;
    std::map<EdgeId, Rational> values;
    std::vector<std::pair<Rational, int>> distinct_values;  // sorted, with multiplicities
    bool is_uniform = false;       // degenerate true for edgeless graphs
    std::optional<Rational> uniform_value;
};

/// Brandes-style per-source dependency accumulation adapted to edges;
/// no path is ever materialized. Throws on the empty graph.
EdgeCentralityReport edge_betweenness(const Graph& g);

struct UniformityResult {
    bool uniform = false;
    std::optional<Rational> value;  // present iff uniform and >= 1 edge
    bool degenerate = false;        // no edges: uniform with no value
};

UniformityResult is_edge_betweenness_uniform(const Graph& g);

/// Closed form for graphs of diameter at most 2: for e = (u,w),
///   B'(e) = 2 + 2*sum_{v in N(w)\N(u), v != u} 1/|N(u) cap N(v)|
///             + 2*sum_{v in N(u)\N(w), v != w} 1/|N(w) cap N(v)|.
/// Throws if the graph is disconnected or has diameter > 2.
Rational closed_form_diameter2(const Graph& g, EdgeId e);

/// Uniform value of K_{m,n}: 2 + 2(n-1)/m + 2(m-1)/n.
Rational closed_form_complete_bipartite(int m, int n);

/// Uniform value of K_n minus a perfect matching (even n >= 4): 2 + 4/(n-2).
Rational closed_form_complete_minus_perfect_matching(int n);

/// Dispatch on the family kinds that have closed-form uniform values.
Rational closed_form_family(FamilyKind kind, const std::vector<int>& params);

/// One cut-set instance for the corrected Comellas-Gago inequality:
/// the B' mass crossing the cut is at least 2*n_x*(n - n_x), with equality
/// not guaranteed.
struct CutsetCheck {
    int part_size = 0;                 // n_x = |X|
    std::vector<EdgeId> cut_edges;
    Rational cut_sum;
    Rational lower_bound;              // 2 * n_x * (n - n_x)
    bool strict = false;               // cut_sum > lower_bound
};

/// Requires a connected graph and a nonempty proper subset X; throws if the
/// computed cut mass ever falls below the bound (it cannot, for connected g).
CutsetCheck cutset_check(const Graph& g, const std::vector<Vertex>& x);

}  // namespace ebu
