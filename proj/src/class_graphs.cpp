#include "ebu/class_graphs.hpp"

#include <algorithm>
#include <stdexcept>

#include "ebu/bfs.hpp"
#include "ebu/centrality.hpp"

#include "json.hpp"

namespace ebu {

ClassId::ClassId(int c, int n_) : cls(c), n(n_) {
    if (cls != 1 && cls != 2) throw std::invalid_argument("ClassId: class must be 1 or 2");
    if (n < 1) throw std::invalid_argument("ClassId: n must be at least 1");
}

int ClassId::reference_source() const {
    const int b = inner_chord();
    const int base = cls == 1 ? 2 + b * (3 * n - 1) : 2 + b * (3 * n);
    return label_mod(base, order());
}

std::string ClassId::str() const {
    return "C" + std::to_string(order()) + "(1," + std::to_string(inner_chord()) + ")";
}

Graph class_graph(const ClassId& id) {
    return circulant(CirculantSpec(id.order(), {1, id.inner_chord()}));
}

int label_mod(long long x, int k) {
    long long r = (x - 1) % k;
    if (r < 0) r += k;
    return static_cast<int>(r) + 1;
}

UnusedEdgeSet predicted_unused_edges(const ClassId& id, int source) {
    if (id.n < 2)
        throw std::invalid_argument("predicted_unused_edges: formulas require n >= 2 (n = 1 is handled by direct computation)");
    const int k = id.order();
    if (source < 1 || source > k) throw std::invalid_argument("predicted_unused_edges: source out of range");
    const long long s = source;
    const long long a = id.unused_offset();
    const long long b = id.inner_chord();

    UnusedEdgeSet result;
    result.source = source;
    auto put = [&](long long u, long long v) {
        result.edges.emplace(label_mod(u, k), label_mod(v, k));
    };
    if (id.cls == 1) {
        put(s + a, s + a + 1);
        put(s - a, s - a - 1);
        put(s - a, s + a);
        put(s + a + 1, s + a + 1 - b);
        put(s - a - 1, s - a - 1 + b);
        put(s + a + 1 - b, s - a - 1 + b);
    } else {
        put(s + a, s + a - 1);
        put(s - a, s + a);
        put(s - a, s - a + 1);
        put(s + a - 1, s + a - 1 - b);
        put(s - a + 1, s - a + 1 + b);
        put(s + a - 1 - b, s - a + 1 + b);
    }
    if (result.edges.size() != 6)
        throw std::logic_error("predicted_unused_edges: formula produced fewer than 6 distinct edges");
    return result;
}

// The piecewise maps, with each recursive branch unrolled one step into the
// base branch. Branch selection happens on the representative of v inside a
// window of k consecutive integers tied to the anchor's block; written as
// listed, first match wins.
int phi(const ClassId& id, int anchor, int v) {
    if (id.n < 2) throw std::invalid_argument("phi: defined for n >= 2");
    const int k = id.order();
    if (anchor < 1 || anchor > k || v < 1 || v > k)
        throw std::invalid_argument("phi: vertex label out of range");
    const long long a = anchor;
    const long long b = id.inner_chord();
    const long long n = id.n;

    long long w = 0;
    if (id.cls == 1) {
        const long long m = b - 1;  // 6n - 1
        const long long o = a - ((a % m) + m) % m;
        const long long lo = o + 3 - b;  // window [o+3-6n, o+12n-1], length 18n-3
        long long vr = lo + (((v - lo) % k) + k) % k;
        if (o + 2 <= vr && vr <= o + b) {
            w = a - b * (a - vr);
        } else if (vr == o + 1) {
            w = a - b * (a - (vr + 1)) - 1;
        } else if (vr == o + b + 1) {
            w = a - b * (a - (vr - 1)) + 1;
        } else if (o + b + 2 <= vr && vr <= o + 12 * n - 1) {
            w = a - b * (a - (vr - b)) + 1;
        } else if (lo <= vr && vr <= o) {
            w = a - b * (a - (vr + b)) - 1;
        } else {
            throw std::logic_error("phi: representative escaped the window");
        }
    } else {
        const long long m = b + 1;  // 6n + 1
        const long long o = a - ((a % m) + m) % m;
        const long long lo = o - b;  // window [o-6n, o+12n+2], length 18n+3
        long long vr = lo + (((v - lo) % k) + k) % k;
        auto base = [&](long long x) { return a + b * (a - x); };      // o+3 <= x <= o+6n+1
        auto at_o2 = [&]() { return base(o + 3) + 12 * n + 1; };       // phi(o+2) = phi(o+3) + 12n+1
        auto at_o1 = [&]() { return at_o2() + b; };                    // phi(o+1) = phi(o+2) + 6n
        auto eval = [&](long long x) {  // any x in [o+1, o+6n+1]
            if (x == o + 1) return at_o1();
            if (x == o + 2) return at_o2();
            return base(x);
        };
        if (o + 3 <= vr && vr <= o + b + 1) {
            w = base(vr);
        } else if (vr == o + 2) {
            w = at_o2();
        } else if (vr == o + 1) {
            w = at_o1();
        } else if (lo <= vr && vr <= o) {
            w = eval(vr + m) + m;
        } else if (o + b + 2 <= vr && vr <= o + 12 * n + 2) {
            w = eval(vr - m) - m;
        } else {
            throw std::logic_error("phi: representative escaped the window");
        }
    }
    return label_mod(w, k);
}

namespace {

std::set<EdgeId> to_zero_indexed(const std::set<EdgeId>& one_indexed) {
    std::set<EdgeId> out;
    for (const EdgeId& e : one_indexed) out.emplace(e.u - 1, e.v - 1);
    return out;
}

int chord_length(const EdgeId& e, int k) {
    int d = (e.v - e.u) % k;
    return std::min(d, k - d);
}

struct MappingBundle {
    std::vector<int> mapping;  // 1-based
    EdgeId e1, e2;
};

MappingBundle build_mapping(const ClassId& id, int source, int anchor) {
    const int k = id.order();
    const int b = id.inner_chord();
    const int t = source - id.reference_source();
    MappingBundle out;
    out.mapping.assign(static_cast<size_t>(k) + 1, 0);
    // conjugate the reference-frame map by the rotation taking the reference source
    // to the requested source
    const int anchor_frame = label_mod(anchor - t, k);
    for (int v = 1; v <= k; ++v)
        out.mapping[static_cast<size_t>(v)] = label_mod(phi(id, anchor_frame, label_mod(v - t, k)) + t, k);
    const int mate = id.cls == 1 ? label_mod(anchor + 1, k) : label_mod(anchor - 1, k);
    out.e1 = EdgeId(anchor, mate);
    out.e2 = EdgeId(anchor, label_mod(anchor + b, k));
    return out;
}

PrunedAutomorphismCheck verify_mapping_against(const ClassId& id, int source, int anchor,
                                               bool prune) {
    const int k = id.order();
    if (source < 1 || source > k) throw std::invalid_argument("verify: source out of range");
    if (anchor < 0) anchor = source;
    if (anchor < 1 || anchor > k) throw std::invalid_argument("verify: anchor out of range");

    PrunedAutomorphismCheck result;
    MappingBundle bundle = build_mapping(id, source, anchor);

    Graph g = class_graph(id);
    std::set<EdgeId> removed;
    if (prune) removed = to_zero_indexed(predicted_unused_edges(id, source).edges);
    Graph h = g;
    for (const EdgeId& e : removed) h = h.without_edge(e);

    // (i) bijectivity over 1..k
    std::vector<char> hit(static_cast<size_t>(k) + 1, 0);
    for (int v = 1; v <= k; ++v) {
        int w = bundle.mapping[static_cast<size_t>(v)];
        if (hit[static_cast<size_t>(w)]) {
            result.failure = "mapping is not a bijection: label " + std::to_string(w) + " hit twice";
            result.bad_vertex = w;
            return result;
        }
        hit[static_cast<size_t>(w)] = 1;
    }

    // (ii) neighborhoods: N_H(phi(v)) = phi(N_H(v)) for every vertex
    for (int v = 1; v <= k; ++v) {
        const int pv = bundle.mapping[static_cast<size_t>(v)];
        std::vector<int> mapped;
        for (Vertex w0 : h.neighbors(v - 1))
            mapped.push_back(bundle.mapping[static_cast<size_t>(w0 + 1)] - 1);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != h.neighbors(pv - 1)) {
            for (Vertex w0 : h.neighbors(v - 1)) {
                int pw = bundle.mapping[static_cast<size_t>(w0 + 1)];
                if (!h.has_edge(pv - 1, pw - 1)) {
                    result.failure = "adjacency not preserved at edge (" + std::to_string(v) + "," +
                                     std::to_string(w0 + 1) + ")";
                    result.bad_vertex = v;
                    result.bad_edge = EdgeId(v, w0 + 1);
                    return result;
                }
            }
            result.failure = "neighborhood mismatch at vertex " + std::to_string(v);
            result.bad_vertex = v;
            return result;
        }
    }

    // (iii) the designated pair is exchanged
    EdgeId image(bundle.mapping[static_cast<size_t>(bundle.e1.u)],
                 bundle.mapping[static_cast<size_t>(bundle.e1.v)]);
    if (image != bundle.e2) {
        result.failure = "phi does not map e1 to e2 (image (" + std::to_string(image.u) + "," +
                         std::to_string(image.v) + "))";
        result.bad_edge = bundle.e1;
        return result;
    }

    result.ok = true;
    result.value.class_id = id;
    result.value.source = source;
    result.value.anchor = anchor;
    result.value.mapping = std::move(bundle.mapping);
    result.value.e1 = bundle.e1;
    result.value.e2 = bundle.e2;

    // outer-chord support must land exactly on inner-chord support; this is
    // what lets contribution sums transfer between the two rotation orbits
    std::set<EdgeId> outer_img, inner;
    for (const EdgeId& e0 : h.edges()) {
        EdgeId e(e0.u + 1, e0.v + 1);
        if (chord_length(e0, k) == 1)
            outer_img.emplace(result.value.mapping[static_cast<size_t>(e.u)],
                              result.value.mapping[static_cast<size_t>(e.v)]);
        else
            inner.insert(e);
    }
    result.value.swaps_chord_orbits = outer_img == inner;
    return result;
}

}  // namespace

PrunedAutomorphismCheck verify_pruned_automorphism(const ClassId& id, int source, int anchor) {
    return verify_mapping_against(id, source, anchor, /*prune=*/true);
}

PrunedAutomorphismCheck verify_automorphism_unpruned(const ClassId& id, int source, int anchor) {
    return verify_mapping_against(id, source, anchor, /*prune=*/false);
}

EbuCertificate ebu_certificate(const ClassId& id) {
    EbuCertificate cert;
    cert.class_id = id;
    cert.k = id.order();
    const Graph g = class_graph(id);

    // rotation orbits of edges: one per chord length
    {
        std::set<int> lengths;
        for (const EdgeId& e : g.edges()) lengths.insert(chord_length(e, cert.k));
        cert.orbit_count = static_cast<int>(lengths.size());
    }

    const EdgeCentralityReport report = edge_betweenness(g);
    if (report.is_uniform) cert.uniform_value = report.uniform_value;

    if (id.n == 1) {
        const Rational expected = id.cls == 1 ? Rational(13) : Rational(22);
        cert.verdict = report.is_uniform && report.uniform_value == expected;
        cert.cross_checked = true;
        cert.note = "n = 1: direct exact computation, expected uniform value " + expected.str();
        return cert;
    }

    bool all_pass = true;
    const std::vector<EdgeId> all_edges = g.edges();
    for (int s = 1; s <= cert.k; ++s) {
        SourceCheck check;
        check.source = s;

        const std::set<EdgeId> predicted = to_zero_indexed(predicted_unused_edges(id, s).edges);
        std::set<EdgeId> support = shortest_path_edge_support(g, s - 1);
        std::set<EdgeId> complement;
        for (const EdgeId& e : all_edges)
            if (!support.count(e)) complement.insert(e);
        check.unused_match = complement == predicted;
        if (!check.unused_match) check.detail = "BFS support complement differs from the six-edge formula";

        PrunedAutomorphismCheck aut = verify_pruned_automorphism(id, s);
        const bool fixes_source = aut.ok && aut.value.mapping[static_cast<size_t>(s)] == s;
        check.automorphism_valid = aut.ok && fixes_source;
        check.support_swap = aut.ok && aut.value.swaps_chord_orbits;
        if (!aut.ok)
            check.detail = aut.failure;
        else if (!fixes_source)
            check.detail = "automorphism does not fix the source";
        else if (!check.support_swap)
            check.detail = "outer-chord support does not map onto inner-chord support";

        all_pass = all_pass && check.unused_match && check.automorphism_valid && check.support_swap;
        cert.per_source.push_back(std::move(check));
    }

    cert.verdict = all_pass && cert.orbit_count <= 2;
    cert.cross_checked = true;
    if (cert.verdict != report.is_uniform) {
        cert.note = "structural verdict disagrees with exact edge betweenness";
        cert.verdict = false;
    }
    return cert;
}

std::string certificate_to_json(const EbuCertificate& cert) {
    nlohmann::ordered_json j;
    j["class"] = cert.class_id.cls;
    j["n"] = cert.class_id.n;
    j["k"] = cert.k;
    j["graph"] = cert.class_id.str();
    j["verdict"] = cert.verdict;
    j["orbit_count"] = cert.orbit_count;
    j["uniform_value"] = cert.uniform_value ? nlohmann::ordered_json(cert.uniform_value->str())
                                            : nlohmann::ordered_json(nullptr);
    j["cross_checked"] = cert.cross_checked;
    if (!cert.note.empty()) j["note"] = cert.note;
    nlohmann::ordered_json sources = nlohmann::ordered_json::array();
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const SourceCheck& sc : cert.per_source) {
        nlohmann::ordered_json entry;
        entry["s"] = sc.source;
        entry["unused_match"] = sc.unused_match;
        entry["automorphism_valid"] = sc.automorphism_valid;
        entry["support_swap"] = sc.support_swap;
        sources.push_back(entry);
        if (!sc.detail.empty()) {
            nlohmann::ordered_json f;
            f["s"] = sc.source;
            f["detail"] = sc.detail;
            failures.push_back(f);
        }
    }
    j["sources"] = std::move(sources);
    if (!failures.empty()) j["failures"] = std::move(failures);
    return j.dump();
}

}  // namespace ebu
