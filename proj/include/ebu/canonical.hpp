#pragma once

#include <string>
#include <vector>

#include "ebu/graph.hpp"

namespace ebu {

/// Result of canonical labeling. Two graphs are isomorphic iff their
/// canonical_bytes are equal. The generators discovered during the search
/// generate the full automorphism group of the input graph.
struct CanonicalLabel {
    std::string canonical_bytes;                         // canonical graph6
    std::vector<std::vector<Vertex>> automorphism_generators;
    std::vector<Vertex> labeling;                        // vertex -> canonical position
    std::vector<int> vertex_orbits;                      // orbit id per vertex
    int orbit_count = 0;
};

inline constexpr int kCanonicalVertexLimit = 128;

/// Canonical relabeling by equitable-partition refinement with
/// individualization and backtracking. Graphs above the size limit are
/// rejected (std::invalid_argument).
CanonicalLabel canonical_form(const Graph& g);

/// Color-respecting variant: vertices with smaller color ids come first in
/// the initial partition, and the canonical form separates color classes.
/// Two colored graphs compare equal iff they are isomorphic as colored graphs.
CanonicalLabel canonical_form(const Graph& g, const std::vector<int>& colors);

/// Fast-rejects on degree-sequence mismatch before canonical labeling.
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace ebu
