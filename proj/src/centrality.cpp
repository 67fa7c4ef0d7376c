#include "ebu/centrality.hpp"

#include <algorithm>
#include <stdexcept>

#include "ebu/bfs.hpp"

namespace ebu {

EdgeCentralityReport edge_betweenness(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("edge_betweenness: empty graph");

    // Edge ids in (u,v) order so per-source accumulation can index a flat array.
    const std::vector<EdgeId> edge_list = g.edges();
    std::vector<Rational> totals(edge_list.size());
    std::map<EdgeId, size_t> edge_index;
    for (size_t i = 0; i < edge_list.size(); ++i) edge_index.emplace(edge_list[i], i);

    std::vector<Rational> delta(static_cast<size_t>(n));
    for (Vertex s = 0; s < n; ++s) {
        BfsResult bfs = bfs_count(g, s);
        std::fill(delta.begin(), delta.end(), Rational(0));
        // Dependency accumulation over the shortest-path DAG, deepest first.
        // For a DAG edge v->w the source contributes sigma_v/sigma_w*(1+delta_w),
        // which sums sigma_sy(e)/sigma_sy over all targets y behind w.
        for (auto it = bfs.order.rbegin(); it != bfs.order.rend(); ++it) {
            Vertex w = *it;
            const auto wi = static_cast<size_t>(w);
            if (bfs.dist[wi] == 0) continue;
            const Rational one_plus_delta = Rational(1) + delta[wi];
            for (Vertex v : g.neighbors(w)) {
                const auto vi = static_cast<size_t>(v);
                if (bfs.dist[vi] != bfs.dist[wi] - 1) continue;
                Rational c = Rational(bfs.sigma[vi], bfs.sigma[wi]) * one_plus_delta;
                totals[edge_index.at(EdgeId(v, w))] += c;
                delta[vi] += c;
            }
        }
    }

    EdgeCentralityReport report;
    report.graph_hash = graph_digest(g);
    for (size_t i = 0; i < edge_list.size(); ++i) report.values.emplace(edge_list[i], totals[i]);

    std::map<Rational, int> histogram;
    for (const auto& val : totals) ++histogram[val];
    report.distinct_values.assign(histogram.begin(), histogram.end());
    if (edge_list.empty()) {
        report.is_uniform = true;  // degenerate: nothing to differ
    } else if (report.distinct_values.size() == 1) {
        report.is_uniform = true;
        report.uniform_value = report.distinct_values.front().first;
    }
    return report;
}

UniformityResult is_edge_betweenness_uniform(const Graph& g) {
    UniformityResult r;
    if (g.edge_count() == 0) {
        r.uniform = true;
        r.degenerate = true;
        return r;
    }
    EdgeCentralityReport report = edge_betweenness(g);
    r.uniform = report.is_uniform;
    r.value = report.uniform_value;
    return r;
}

Rational closed_form_diameter2(const Graph& g, EdgeId e) {
    DiameterResult d = diameter(g);
    if (!d.connected || d.diameter > 2)
        throw std::invalid_argument("closed_form_diameter2: graph must be connected with diameter <= 2");
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("closed_form_diameter2: edge not present");

    auto common_neighbors = [&g](Vertex a, Vertex b) {
        const auto& na = g.neighbors(a);
        const auto& nb = g.neighbors(b);
        size_t i = 0, j = 0;
        int count = 0;
        while (i < na.size() && j < nb.size()) {
            if (na[i] < nb[j]) ++i;
            else if (na[i] > nb[j]) ++j;
            else { ++count; ++i; ++j; }
        }
        return count;
    };

    Rational total(2);  // the endpoint pair, both directions
    auto side = [&](Vertex from, Vertex other) {
        // vertices adjacent to `other` but not to `from`: distance 2 from `from`,
        // reached through the edge with multiplicity 1 of |N(from) cap N(v)| paths.
        Rational sum(0);
        for (Vertex v : g.neighbors(other)) {
            if (v == from || g.has_edge(from, v)) continue;
            sum += Rational(BigInt(1), BigInt(common_neighbors(from, v)));
        }
        return sum;
    };
    total += Rational(2) * side(e.u, e.v);
    total += Rational(2) * side(e.v, e.u);
    return total;
}

Rational closed_form_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("closed_form: K_{m,n} sizes must be positive");
    return Rational(2) + Rational(BigInt(2 * (n - 1)), BigInt(m)) + Rational(BigInt(2 * (m - 1)), BigInt(n));
}

Rational closed_form_complete_minus_perfect_matching(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("closed_form: matching requires even order >= 4");
    return Rational(2) + Rational(BigInt(4), BigInt(n - 2));
}

Rational closed_form_family(FamilyKind kind, const std::vector<int>& params) {
    switch (kind) {
        case FamilyKind::CompleteBipartite:
            if (params.size() != 2) throw std::invalid_argument("closed_form: K_{m,n} needs two sizes");
            return closed_form_complete_bipartite(params[0], params[1]);
        case FamilyKind::CompleteMinusPerfectMatching:
            if (params.size() != 1) throw std::invalid_argument("closed_form: matching needs one order");
            return closed_form_complete_minus_perfect_matching(params[0]);
        default:
            throw std::invalid_argument("closed_form_family: no closed form for this kind");
    }
}

CutsetCheck cutset_check(const Graph& g, const std::vector<Vertex>& x) {
    const int n = g.vertex_count();
    if (!is_connected(g) || n < 2) throw std::invalid_argument("cutset_check: graph must be connected");
    std::vector<char> in_x(static_cast<size_t>(n), 0);
    for (Vertex v : x) {
        if (v < 0 || v >= n) throw std::invalid_argument("cutset_check: vertex out of range");
        in_x[static_cast<size_t>(v)] = 1;
    }
    int nx = 0;
    for (char c : in_x) nx += c;
    if (nx == 0 || nx == n) throw std::invalid_argument("cutset_check: X must be a nonempty proper subset");

    EdgeCentralityReport report = edge_betweenness(g);
    CutsetCheck result;
    result.part_size = nx;
    result.lower_bound = Rational(BigInt(2) * nx * (n - nx));
    for (const auto& [edge, value] : report.values) {
        if (in_x[static_cast<size_t>(edge.u)] != in_x[static_cast<size_t>(edge.v)]) {
            result.cut_edges.push_back(edge);
            result.cut_sum += value;
        }
    }
    if (result.cut_sum < result.lower_bound)
        throw std::logic_error("cutset_check: corrected inequality violated");
    result.strict = result.cut_sum > result.lower_bound;
    return result;
}

}  // namespace ebu
