#include "ebu/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "ebu/graph6.hpp"

namespace ebu {

Graph Graph::from_edges(int vertex_count, std::span<const std::pair<int, int>> edges) {
    Graph g(vertex_count);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    const auto& nu = adj_[static_cast<size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    auto& nu = adj_[static_cast<size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) throw std::invalid_argument("add_edge: parallel edge");
    nu.insert(it, v);
    auto& nv = adj_[static_cast<size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

std::vector<EdgeId> Graph::edges() const {
    std::vector<EdgeId> result;
    result.reserve(static_cast<size_t>(edge_count_));
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) result.emplace_back(u, v);
    return result;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> deg;
    deg.reserve(adj_.size());
    for (const auto& nb : adj_) deg.push_back(static_cast<int>(nb.size()));
    std::sort(deg.begin(), deg.end());
    return deg;
}

Graph Graph::without_edge(EdgeId e) const {
    if (!has_edge(e.u, e.v)) throw std::invalid_argument("without_edge: edge not present");
    Graph g(*this);
    auto& nu = g.adj_[static_cast<size_t>(e.u)];
    nu.erase(std::lower_bound(nu.begin(), nu.end(), e.v));
    auto& nv = g.adj_[static_cast<size_t>(e.v)];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), e.u));
    --g.edge_count_;
    return g;
}

Graph Graph::complement() const {
    const int n = vertex_count();
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        const auto& nu = neighbors(u);
        size_t i = 0;
        for (Vertex v = 0; v < n; ++v) {
            while (i < nu.size() && nu[i] < v) ++i;
            bool adjacent = i < nu.size() && nu[i] == v;
            if (!adjacent && v > u) g.add_edge(u, v);
        }
    }
    return g;
}

void Graph::validate() const {
    long long degree_sum = 0;
    for (Vertex u = 0; u < vertex_count(); ++u) {
        const auto& nu = neighbors(u);
        degree_sum += static_cast<long long>(nu.size());
        for (size_t i = 0; i < nu.size(); ++i) {
            Vertex v = nu[i];
            if (v < 0 || v >= vertex_count()) throw std::logic_error("neighbor out of range");
            if (v == u) throw std::logic_error("self-loop");
            if (i > 0 && nu[i - 1] >= v) throw std::logic_error("neighbor list not strictly sorted");
            if (!has_edge(v, u)) throw std::logic_error("adjacency not symmetric");
        }
    }
    if (degree_sum != 2LL * edge_count_) throw std::logic_error("edge count does not match degree sum");
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n;
}

DiameterResult diameter(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("diameter: empty graph");
    DiameterResult result;
    std::vector<int> dist(static_cast<size_t>(n));
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<size_t>(s)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                    q.push(w);
                }
            }
        }
        for (int d : dist) {
            if (d < 0)
                result.connected = false;
            else if (d > result.diameter)
                result.diameter = d;
        }
    }
    return result;
}

std::string graph_digest(const Graph& g) {
    const std::string bytes = write_graph6(g);
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace ebu
