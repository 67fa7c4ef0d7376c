#include "ebu/bfs.hpp"

#include <stdexcept>

namespace ebu {

BfsResult bfs_count(const Graph& g, Vertex source) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n) throw std::invalid_argument("bfs_count: source out of range");

    BfsResult r;
    r.source = source;
    r.dist.assign(static_cast<size_t>(n), -1);
    r.sigma.assign(static_cast<size_t>(n), BigInt(0));
    r.order.reserve(static_cast<size_t>(n));

    r.dist[static_cast<size_t>(source)] = 0;
    r.sigma[static_cast<size_t>(source)] = 1;
    // Plain index-queue; neighbor lists are sorted, so dequeue order is
    // deterministic.
    std::vector<Vertex> queue;
    queue.push_back(source);
    for (size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        r.order.push_back(v);
        const int dv = r.dist[static_cast<size_t>(v)];
        for (Vertex w : g.neighbors(v)) {
            auto wi = static_cast<size_t>(w);
            if (r.dist[wi] < 0) {
                r.dist[wi] = dv + 1;
                queue.push_back(w);
            }
            if (r.dist[wi] == dv + 1) r.sigma[wi] += r.sigma[static_cast<size_t>(v)];
        }
    }
    return r;
}

std::set<EdgeId> shortest_path_edge_support(const Graph& g, Vertex s) {
    if (!is_connected(g)) throw std::invalid_argument("shortest_path_edge_support: graph not connected");
    BfsResult r = bfs_count(g, s);
    std::set<EdgeId> support;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v && r.dist[static_cast<size_t>(u)] != r.dist[static_cast<size_t>(v)])
                support.emplace(u, v);
    return support;
}

}  // namespace ebu
