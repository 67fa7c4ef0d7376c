#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

namespace ebu::testsupport {

namespace {

std::vector<int> bfs_distances(const Graph& g, Vertex s) {
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
    std::queue<Vertex> q;
    dist[static_cast<size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                q.push(w);
            }
    }
    return dist;
}

// every shortest x->y path, materialized one at a time
void enumerate_paths(const Graph& g, const std::vector<int>& dist_from_x, Vertex y,
                     std::vector<Vertex>& path, long long& total,
                     std::map<EdgeId, long long>& through) {
    Vertex v = path.back();
    if (v == y) {
        ++total;
        for (size_t i = 0; i + 1 < path.size(); ++i) ++through[EdgeId(path[i], path[i + 1])];
        return;
    }
    for (Vertex w : g.neighbors(v)) {
        if (dist_from_x[static_cast<size_t>(w)] != dist_from_x[static_cast<size_t>(v)] + 1) continue;
        if (dist_from_x[static_cast<size_t>(w)] > dist_from_x[static_cast<size_t>(y)]) continue;
        path.push_back(w);
        enumerate_paths(g, dist_from_x, y, path, total, through);
        path.pop_back();
    }
}

}  // namespace

std::map<EdgeId, Rational> brute_edge_betweenness(const Graph& g) {
    std::map<EdgeId, Rational> result;
    for (const EdgeId& e : g.edges()) result.emplace(e, Rational(0));
    const int n = g.vertex_count();
    for (Vertex x = 0; x < n; ++x) {
        std::vector<int> dist = bfs_distances(g, x);
        for (Vertex y = 0; y < n; ++y) {
            if (x == y || dist[static_cast<size_t>(y)] < 0) continue;
            long long total = 0;
            std::map<EdgeId, long long> through;
            std::vector<Vertex> path{x};
            enumerate_paths(g, dist, y, path, total, through);
            for (const auto& [edge, count] : through)
                result[edge] += Rational(BigInt(count), BigInt(total));
        }
    }
    return result;
}

BigInt ordered_pair_distance_sum(const Graph& g) {
    BigInt sum = 0;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        std::vector<int> dist = bfs_distances(g, x);
        for (int d : dist)
            if (d > 0) sum += d;
    }
    return sum;
}

std::vector<std::vector<Vertex>> brute_automorphisms(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Vertex> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<Vertex>> found;
    do {
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u) {
            if (g.degree(u) != g.degree(perm[static_cast<size_t>(u)])) { ok = false; break; }
            for (Vertex v : g.neighbors(u))
                if (u < v && !g.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)])) {
                    ok = false;
                    break;
                }
        }
        if (ok) found.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

bool brute_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    const int n = g.vertex_count();
    std::vector<Vertex> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u)
            for (Vertex v : g.neighbors(u))
                if (u < v && !h.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)])) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Graph random_connected_graph(int n, int p_percent, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(pick(rng), v);  // random spanning tree keeps it connected
    }
    std::uniform_int_distribution<int> percent(0, 99);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && percent(rng) < p_percent) g.add_edge(u, v);
    return g;
}

}  // namespace ebu::testsupport
