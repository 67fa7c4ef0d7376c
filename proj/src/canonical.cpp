#include "ebu/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ebu/graph6.hpp"

namespace ebu {

namespace {

// Union-find over vertex ids.
struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

// Individualization-refinement search for a canonical labeling, collecting
// automorphism generators from leaf collisions. The canonical leaf is the
// lexicographically smallest relabeled upper-triangle bit string (packed the
// same way graph6 packs it, so the winner doubles as the canonical graph6
// body).
class Canonicalizer {
public:
    Canonicalizer(const Graph& g, const std::vector<int>* colors) : g_(g), n_(g.vertex_count()) {
        if (n_ > kCanonicalVertexLimit)
            throw std::invalid_argument("canonical_form: vertex count exceeds limit");
        if (colors && static_cast<int>(colors->size()) != n_)
            throw std::invalid_argument("canonical_form: color vector size mismatch");
        lab_.resize(static_cast<size_t>(n_));
        std::iota(lab_.begin(), lab_.end(), 0);
        if (colors) {
            std::stable_sort(lab_.begin(), lab_.end(),
                             [&](Vertex a, Vertex b) { return (*colors)[static_cast<size_t>(a)] < (*colors)[static_cast<size_t>(b)]; });
        }
        cell_start_.assign(static_cast<size_t>(n_), 0);
        if (colors) {
            int start = 0;
            for (int i = 1; i <= n_; ++i) {
                bool boundary = i == n_ || (*colors)[static_cast<size_t>(lab_[static_cast<size_t>(i)])] !=
                                               (*colors)[static_cast<size_t>(lab_[static_cast<size_t>(i - 1)])];
                if (boundary) {
                    for (int j = start; j < i; ++j) cell_start_[static_cast<size_t>(j)] = start;
                    start = i;
                }
            }
        }
        pos_of_.assign(static_cast<size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) pos_of_[static_cast<size_t>(lab_[static_cast<size_t>(i)])] = i;
        scratch_count_.assign(static_cast<size_t>(n_), 0);
    }

    CanonicalLabel run() {
        CanonicalLabel out;
        if (n_ == 0) {
            out.canonical_bytes = write_graph6(Graph(0));
            out.orbit_count = 0;
            return out;
        }
        refine();
        prefix_.clear();
        search();

        out.canonical_bytes = graph6_header_ + best_sig_;
        out.labeling = best_pos_;
        out.automorphism_generators = generators_;

        DisjointSet ds(n_);
        for (const auto& gen : generators_)
            for (int v = 0; v < n_; ++v) ds.unite(v, gen[static_cast<size_t>(v)]);
        out.vertex_orbits.assign(static_cast<size_t>(n_), 0);
        std::vector<int> root_to_orbit(static_cast<size_t>(n_), -1);
        int next_orbit = 0;
        for (int v = 0; v < n_; ++v) {
            int r = ds.find(v);
            if (root_to_orbit[static_cast<size_t>(r)] < 0) root_to_orbit[static_cast<size_t>(r)] = next_orbit++;
            out.vertex_orbits[static_cast<size_t>(v)] = root_to_orbit[static_cast<size_t>(r)];
        }
        out.orbit_count = next_orbit;
        return out;
    }

private:
    // --- partition state: lab_ is a permutation of vertices; positions are
    // grouped into cells and cell_start_[p] names the first position of the
    // cell containing position p.
    int cell_end(int start) const {
        int e = start + 1;
        while (e < n_ && cell_start_[static_cast<size_t>(e)] == start) ++e;
        return e;
    }

    bool discrete() const {
        for (int i = 0; i < n_; ++i)
            if (cell_start_[static_cast<size_t>(i)] != i) return false;
        return true;
    }

    // Split every cell by neighbor counts into every cell, to a fixpoint.
    // The last round verifies equitability against each current cell, so the
    // result is an equitable ordered partition.
    void refine() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int s = 0; s < n_;) {
                int e = cell_end(s);
                if (split_by_counts(s, e)) changed = true;
                s = e;
            }
        }
    }

    bool split_by_counts(int splitter_start, int splitter_end) {
        auto& cnt = scratch_count_;
        for (int i = splitter_start; i < splitter_end; ++i)
            for (Vertex w : g_.neighbors(lab_[static_cast<size_t>(i)])) ++cnt[static_cast<size_t>(w)];

        bool changed = false;
        for (int s = 0; s < n_;) {
            int e = cell_end(s);
            if (e - s > 1) {
                int first = cnt[static_cast<size_t>(lab_[static_cast<size_t>(s)])];
                bool uniform = true;
                for (int i = s + 1; i < e; ++i)
                    if (cnt[static_cast<size_t>(lab_[static_cast<size_t>(i)])] != first) { uniform = false; break; }
                if (!uniform) {
                    std::stable_sort(lab_.begin() + s, lab_.begin() + e, [&](Vertex a, Vertex b) {
                        return cnt[static_cast<size_t>(a)] < cnt[static_cast<size_t>(b)];
                    });
                    int run_start = s;
                    for (int i = s + 1; i <= e; ++i) {
                        bool boundary = i == e || cnt[static_cast<size_t>(lab_[static_cast<size_t>(i)])] !=
                                                      cnt[static_cast<size_t>(lab_[static_cast<size_t>(i - 1)])];
                        if (boundary) {
                            for (int j = run_start; j < i; ++j) cell_start_[static_cast<size_t>(j)] = run_start;
                            run_start = i;
                        }
                    }
                    for (int i = s; i < e; ++i) pos_of_[static_cast<size_t>(lab_[static_cast<size_t>(i)])] = i;
                    changed = true;
                }
            }
            s = e;
        }

        for (int i = splitter_start; i < splitter_end; ++i)
            for (Vertex w : g_.neighbors(lab_[static_cast<size_t>(i)])) cnt[static_cast<size_t>(w)] = 0;
        return changed;
    }

    int target_cell() const {
        int best = -1, best_size = n_ + 1;
        for (int s = 0; s < n_;) {
            int e = cell_end(s);
            if (e - s > 1 && e - s < best_size) {
                best = s;
                best_size = e - s;
            }
            s = e;
        }
        return best;
    }

    void individualize(int cell, Vertex v) {
        const int end = cell_end(cell);
        int p = pos_of_[static_cast<size_t>(v)];
        std::swap(lab_[static_cast<size_t>(cell)], lab_[static_cast<size_t>(p)]);
        pos_of_[static_cast<size_t>(lab_[static_cast<size_t>(p)])] = p;
        pos_of_[static_cast<size_t>(v)] = cell;
        for (int i = cell + 1; i < end; ++i) cell_start_[static_cast<size_t>(i)] = cell + 1;
    }

    void search() {
        if (discrete()) {
            handle_leaf();
            return;
        }
        const int cell = target_cell();
        const int end = cell_end(cell);
        std::vector<Vertex> candidates(lab_.begin() + cell, lab_.begin() + end);

        const std::vector<Vertex> saved_lab = lab_;
        const std::vector<int> saved_cells = cell_start_;
        const std::vector<int> saved_pos = pos_of_;

        std::vector<Vertex> explored;
        for (Vertex v : candidates) {
            if (pruned_by_orbits(v, explored)) continue;
            individualize(cell, v);
            refine();
            prefix_.push_back(v);
            search();
            prefix_.pop_back();
            lab_ = saved_lab;
            cell_start_ = saved_cells;
            pos_of_ = saved_pos;
            explored.push_back(v);
        }
    }

    // A candidate may be skipped if an already-explored sibling lies in its
    // orbit under the subgroup of discovered automorphisms fixing the
    // current individualized prefix pointwise. This keeps the canonical leaf
    // reachable and the discovered set generating.
    bool pruned_by_orbits(Vertex v, const std::vector<Vertex>& explored) {
        if (explored.empty() || generators_.empty()) return false;
        DisjointSet ds(n_);
        for (const auto& gen : generators_) {
            bool fixes_prefix = true;
            for (Vertex p : prefix_)
                if (gen[static_cast<size_t>(p)] != p) { fixes_prefix = false; break; }
            if (!fixes_prefix) continue;
            for (int u = 0; u < n_; ++u) ds.unite(u, gen[static_cast<size_t>(u)]);
        }
        int rv = ds.find(v);
        for (Vertex u : explored)
            if (ds.find(u) == rv) return true;
        return false;
    }

    void handle_leaf() {
        std::string sig = leaf_signature();
        if (first_pos_.empty()) {
            first_pos_ = pos_of_;
            first_lab_ = lab_;
            first_sig_ = sig;
            best_pos_ = pos_of_;
            best_lab_cache_ = lab_;
            best_sig_ = std::move(sig);
            std::string full = write_graph6(Graph(n_));
            graph6_header_ = full.substr(0, n_ <= 62 ? 1 : 4);  // just N(n)
            return;
        }
        if (sig == first_sig_) {
            record_automorphism(first_lab_);
            return;
        }
        if (sig == best_sig_) {
            record_automorphism(best_lab_cache_);
            return;
        }
        if (sig < best_sig_) {
            best_sig_ = std::move(sig);
            best_pos_ = pos_of_;
            best_lab_cache_ = lab_;
        }
    }

    // Two equal leaf signatures give the automorphism v -> other_lab[pos(v)].
    void record_automorphism(const std::vector<Vertex>& other_lab) {
        std::vector<int> gen(static_cast<size_t>(n_));
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            gen[static_cast<size_t>(v)] = other_lab[static_cast<size_t>(pos_of_[static_cast<size_t>(v)])];
            if (gen[static_cast<size_t>(v)] != v) identity = false;
        }
        if (identity) return;
        for (const auto& existing : generators_)
            if (existing == gen) return;
        generators_.push_back(std::move(gen));
    }

    std::string leaf_signature() const {
        const long long bits = static_cast<long long>(n_) * (n_ - 1) / 2;
        std::string body(static_cast<size_t>((bits + 5) / 6), 0);
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v : g_.neighbors(u)) {
                if (v <= u) continue;
                int i = pos_of_[static_cast<size_t>(u)];
                int j = pos_of_[static_cast<size_t>(v)];
                if (i > j) std::swap(i, j);
                long long bit = static_cast<long long>(j) * (j - 1) / 2 + i;
                body[static_cast<size_t>(bit / 6)] |= static_cast<char>(1 << (5 - bit % 6));
            }
        }
        for (char& c : body) c = static_cast<char>(c + 63);
        return body;
    }

    const Graph& g_;
    int n_;
    std::vector<Vertex> lab_;
    std::vector<int> cell_start_;
    std::vector<int> pos_of_;
    std::vector<int> scratch_count_;
    std::vector<Vertex> prefix_;

    std::vector<int> first_pos_, best_pos_;
    std::vector<Vertex> first_lab_, best_lab_cache_;
    std::string first_sig_, best_sig_;
    std::string graph6_header_;
    std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalLabel canonical_form(const Graph& g) {
    Canonicalizer c(g, nullptr);
    return c.run();
}

CanonicalLabel canonical_form(const Graph& g, const std::vector<int>& colors) {
    Canonicalizer c(g, &colors);
    CanonicalLabel label = c.run();
    // Prefix the color class sizes so differently shaped colorings never
    // compare equal by accident.
    std::string prefix = "c";
    std::vector<int> sorted_colors = colors;
    std::sort(sorted_colors.begin(), sorted_colors.end());
    for (size_t i = 0; i < sorted_colors.size();) {
        size_t j = i;
        while (j < sorted_colors.size() && sorted_colors[j] == sorted_colors[i]) ++j;
        prefix += std::to_string(j - i) + ".";
        i = j;
    }
    label.canonical_bytes = prefix + "|" + label.canonical_bytes;
    return label;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    return canonical_form(g).canonical_bytes == canonical_form(h).canonical_bytes;
}

}  // namespace ebu
