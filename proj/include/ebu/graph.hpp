#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ebu {

using Vertex = int;

/// Undirected edge with endpoints normalized so u < v.
struct EdgeId {
    Vertex u = 0;
    Vertex v = 0;

    EdgeId() = default;
    EdgeId(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const EdgeId&, const EdgeId&) = default;
    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// Simple undirected graph over contiguous 0-based vertex ids.
/// Invariants: no self-loops, no parallel edges, adjacency symmetric,
/// neighbor lists sorted ascending. Immutable once built; all analysis
/// functions take it by const reference and are safe to call concurrently.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count) : adj_(static_cast<size_t>(vertex_count)) {}

    static Graph from_edges(int vertex_count, std::span<const std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    /// Inserts (u,v) keeping neighbor lists sorted. Throws on self-loops,
    /// duplicates, or out-of-range endpoints.
    void add_edge(Vertex u, Vertex v);

    std::vector<EdgeId> edges() const;
    std::vector<int> degree_sequence() const;  // sorted ascending

    Graph without_edge(EdgeId e) const;
    Graph complement() const;

    /// Checks every representation invariant; throws std::logic_error on the
    /// first violation. Used by construction paths and tests.
    void validate() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    int edge_count_ = 0;
};

bool is_connected(const Graph& g);

struct DiameterResult {
    int diameter = 0;  // max eccentricity over connected pairs
    bool connected = true;
};

/// Max pairwise distance; on a disconnected graph reports the max over
/// components plus connected=false. Rejects the empty graph.
DiameterResult diameter(const Graph& g);

/// FNV-1a 64-bit digest of the labeled graph (over its graph6 bytes),
/// rendered as 16 hex digits.
std::string graph_digest(const Graph& g);

}  // namespace ebu
