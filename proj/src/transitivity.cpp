#include "ebu/transitivity.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ebu/bfs.hpp"

namespace ebu {

int deletion_edge_class_count(const Graph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("edge transitivity: graph has no edges");
    std::set<std::string> classes;
    for (EdgeId e : g.edges()) classes.insert(canonical_form(g.without_edge(e)).canonical_bytes);
    return static_cast<int>(classes.size());
}

bool is_edge_transitive(const Graph& g) { return deletion_edge_class_count(g) == 1; }

std::vector<int> edge_orbits(const Graph& g, const CanonicalLabel& label) {
    const std::vector<EdgeId> edge_list = g.edges();
    std::map<EdgeId, int> index;
    for (size_t i = 0; i < edge_list.size(); ++i) index.emplace(edge_list[i], static_cast<int>(i));

    std::vector<int> parent(edge_list.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& gen : label.automorphism_generators) {
        for (size_t i = 0; i < edge_list.size(); ++i) {
            EdgeId image(gen[static_cast<size_t>(edge_list[i].u)], gen[static_cast<size_t>(edge_list[i].v)]);
            int a = find(static_cast<int>(i));
            int b = find(index.at(image));
            if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    std::vector<int> orbit(edge_list.size());
    std::vector<int> root_to_orbit(edge_list.size(), -1);
    int next = 0;
    for (size_t i = 0; i < edge_list.size(); ++i) {
        int r = find(static_cast<int>(i));
        if (root_to_orbit[static_cast<size_t>(r)] < 0) root_to_orbit[static_cast<size_t>(r)] = next++;
        orbit[i] = root_to_orbit[static_cast<size_t>(r)];
    }
    return orbit;
}

bool is_edge_transitive_via_orbits(const Graph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("edge transitivity: graph has no edges");
    CanonicalLabel label = canonical_form(g);
    std::vector<int> orbits = edge_orbits(g, label);
    return *std::max_element(orbits.begin(), orbits.end()) == 0;
}

bool is_vertex_transitive(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return canonical_form(g).orbit_count == 1;
}

DistanceRegularity distance_regularity(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0 || !is_connected(g))
        throw std::invalid_argument("distance_regularity: graph must be nonempty and connected");

    DistanceRegularity result;
    int diam = -1;
    // b[i] / c[i] get pinned by the first vertex seen at layer i; every other
    // (source, vertex) pair must reproduce them.
    std::vector<int> b, c;
    for (Vertex s = 0; s < n; ++s) {
        BfsResult bfs = bfs_count(g, s);
        int ecc = *std::max_element(bfs.dist.begin(), bfs.dist.end());
        if (s == 0) {
            diam = ecc;
            b.assign(static_cast<size_t>(diam + 1), -1);
            c.assign(static_cast<size_t>(diam + 1), -1);
        } else if (ecc != diam) {
            return result;  // eccentricities differ: not distance-regular
        }
        for (Vertex u = 0; u < n; ++u) {
            int i = bfs.dist[static_cast<size_t>(u)];
            int down = 0, up = 0;
            for (Vertex w : g.neighbors(u)) {
                int dw = bfs.dist[static_cast<size_t>(w)];
                if (dw == i - 1) ++down;
                else if (dw == i + 1) ++up;
            }
            if (b[static_cast<size_t>(i)] < 0) {
                b[static_cast<size_t>(i)] = up;
                c[static_cast<size_t>(i)] = down;
            } else if (b[static_cast<size_t>(i)] != up || c[static_cast<size_t>(i)] != down) {
                return result;
            }
        }
    }
    result.distance_regular = true;
    result.b.assign(b.begin(), b.end() - 1);            // b_0 .. b_{d-1}
    result.c.assign(c.begin() + 1, c.end());            // c_1 .. c_d
    return result;
}

bool is_distance_regular(const Graph& g) { return distance_regularity(g).distance_regular; }

}  // namespace ebu
