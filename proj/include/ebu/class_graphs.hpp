#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ebu/families.hpp"
#include "ebu/graph.hpp"
#include "ebu/rational.hpp"

namespace ebu {

/// The two circulant families proved edge-betweenness-uniform:
/// Class 1 is C_{18n-3}(1,6n), Class 2 is C_{18n+3}(1,6n).
///
/// Everything in this header speaks 1-indexed vertex labels
/// (1..k, arithmetic mod k); conversion to the 0-indexed Graph happens at
/// the boundary.
struct ClassId {
    int cls = 1;  // 1 or 2
    int n = 1;    // >= 1

    ClassId() = default;
    ClassId(int c, int n_);  // validates

    int order() const { return cls == 1 ? 18 * n - 3 : 18 * n + 3; }
    int inner_chord() const { return 6 * n; }
    /// Offset a in the unused-edge formulas: (3n-1)(6n) for Class 1,
    /// (3n)(6n) for Class 2.
    int unused_offset() const { return cls == 1 ? (3 * n - 1) * 6 * n : (3 * n) * 6 * n; }
    /// The fixed source the pruned-automorphism construction is written against:
    /// 2 + (6n)(3n-1) mod (18n-3), resp. 2 + (6n)(3n) mod (18n+3).
    int reference_source() const;
    std::string str() const;
};

Graph class_graph(const ClassId& id);

/// Reduce any integer to a 1-indexed label in 1..k.
int label_mod(long long x, int k);

/// The six edges that lie on no shortest path from the given source
/// (1-indexed). Only defined for n >= 2; n = 1 is handled by direct
/// computation elsewhere and rejected here.
struct UnusedEdgeSet {
    int source = 0;
    std::set<EdgeId> edges;  // exactly 6, with 1-indexed endpoints
};

UnusedEdgeSet predicted_unused_edges(const ClassId& id, int source);

/// The piecewise relabeling map of the pruned-graph automorphism, with the
/// recursive branches unrolled to closed form. anchor and v are 1-indexed;
/// branch selection works on the representative of v in a window of k
/// consecutive integers around the anchor's block.
int phi(const ClassId& id, int anchor, int v);

/// A fully verified automorphism of G minus the unused edges of one source,
/// exchanging an outer chord with an inner chord.
struct PrunedAutomorphism {
    ClassId class_id;
    int source = 0;                // whose unused set is removed
    int anchor = 0;
    std::vector<int> mapping;      // 1-based: mapping[v] = phi(v), entry 0 unused
    EdgeId e1, e2;                 // the exchanged pair, 1-indexed
    /// The image of the outer-chord support under the map equals the
    /// inner-chord support; this is what transfers contribution sums
    /// between the two edge orbits.
    bool swaps_chord_orbits = false;
};

struct PrunedAutomorphismCheck {
    bool ok = false;
    PrunedAutomorphism value;      // meaningful when ok
    std::string failure;           // names the violating vertex or edge
    int bad_vertex = -1;           // 1-indexed, when applicable
    std::optional<EdgeId> bad_edge;
};

/// Builds the full mapping table from phi (conjugated by rotation when the
/// source differs from the reference source), then checks bijectivity,
/// adjacency preservation on G - E_source, the fixed point at the source,
/// and the e1 -> e2 exchange. anchor < 0 selects the default anchor (the
/// source itself), which is the instantiation the certificate relies on.
PrunedAutomorphismCheck verify_pruned_automorphism(const ClassId& id, int source,
                                                   int anchor = -1);

/// Check against the unpruned graph instead; expected to fail on an edge of
/// the unused set (used to demonstrate the failure-reporting path).
PrunedAutomorphismCheck verify_automorphism_unpruned(const ClassId& id, int source,
                                                     int anchor = -1);

struct SourceCheck {
    int source = 0;
    bool unused_match = false;       // BFS support complement == predicted six edges
    bool automorphism_valid = false; // pruned automorphism verified at this source
    bool support_swap = false;       // outer-support mapped onto inner-support
    std::string detail;              // failure witness, empty when all pass
};

/// Machine-checked evidence that a class graph is edge-betweenness-uniform,
/// assembled without enumerating shortest paths, then cross-checked against
/// the exact centrality computation.
struct EbuCertificate {
    ClassId class_id;
    int k = 0;
    std::vector<SourceCheck> per_source;   // empty for n = 1 (direct route)
    int orbit_count = 0;                   // rotation orbits of edges, <= 2
    bool verdict = false;
    std::optional<Rational> uniform_value;
    bool cross_checked = false;            // exact edge_betweenness agreed
    std::string note;
};

/// For n = 1 computes B' directly and asserts the known values (13 and 22);
/// for n >= 2 runs the per-source support and automorphism checks over every
/// source and concludes structurally, then cross-checks exactly.
EbuCertificate ebu_certificate(const ClassId& id);

/// JSON document: class, n, k, verdict, uniform value, per-source pass/fail
/// with failing witnesses if any.
std::string certificate_to_json(const EbuCertificate& cert);

}  // namespace ebu
