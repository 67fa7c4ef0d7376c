#include "ebu/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace ebu {

CirculantSpec::CirculantSpec(int k, std::vector<int> l) : order(k), chords(std::move(l)) {
    if (order < 3) throw std::invalid_argument("circulant: order must be at least 3");
    std::sort(chords.begin(), chords.end());
    for (size_t i = 0; i < chords.size(); ++i) {
        int j = chords[i];
        if (j < 1) throw std::invalid_argument("circulant: chord must be positive");
        if (j > order / 2) throw std::invalid_argument("circulant: chord exceeds k/2");
        if (i > 0 && chords[i - 1] == j) throw std::invalid_argument("circulant: duplicate chord");
    }
}

std::string CirculantSpec::str() const {
    std::string s = "C" + std::to_string(order) + "(";
    for (size_t i = 0; i < chords.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(chords[i]);
    }
    return s + ")";
}

Graph circulant(const CirculantSpec& spec) {
    CirculantSpec checked(spec.order, spec.chords);  // revalidate
    const int k = checked.order;
    Graph g(k);
    for (int i = 0; i < k; ++i) {
        for (int j : checked.chords) {
            int w = (i + j) % k;
            if (i < w) g.add_edge(i, w);
            else if (w < i && !g.has_edge(w, i)) g.add_edge(w, i);  // wrap-around; j = k/2 collapses
        }
    }
    return g;
}

FamilyKind parse_family_kind(std::string_view name) {
    if (name == "complete") return FamilyKind::Complete;
    if (name == "cycle") return FamilyKind::Cycle;
    if (name == "path") return FamilyKind::Path;
    if (name == "complete_bipartite") return FamilyKind::CompleteBipartite;
    if (name == "complete_minus_perfect_matching") return FamilyKind::CompleteMinusPerfectMatching;
    if (name == "complement_of_circulant") return FamilyKind::ComplementOfCirculant;
    throw std::invalid_argument("unknown family kind: " + std::string(name));
}

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Complete: return "complete";
        case FamilyKind::Cycle: return "cycle";
        case FamilyKind::Path: return "path";
        case FamilyKind::CompleteBipartite: return "complete_bipartite";
        case FamilyKind::CompleteMinusPerfectMatching: return "complete_minus_perfect_matching";
        case FamilyKind::ComplementOfCirculant: return "complement_of_circulant";
    }
    throw std::logic_error("unreachable");
}

namespace {

void need_params(const std::vector<int>& params, size_t count, const char* kind) {
    if (params.size() != count)
        throw std::invalid_argument(std::string(kind) + ": wrong number of parameters");
}

}  // namespace

Graph family(FamilyKind kind, const std::vector<int>& params) {
    switch (kind) {
        case FamilyKind::Complete: {
            need_params(params, 1, "complete");
            int n = params[0];
            if (n < 1) throw std::invalid_argument("complete: order must be positive");
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
            return g;
        }
        case FamilyKind::Cycle: {
            need_params(params, 1, "cycle");
            int n = params[0];
            if (n < 3) throw std::invalid_argument("cycle: order must be at least 3");
            Graph g(n);
            for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
            return g;
        }
        case FamilyKind::Path: {
            need_params(params, 1, "path");
            int n = params[0];
            if (n < 1) throw std::invalid_argument("path: order must be positive");
            Graph g(n);
            for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
            return g;
        }
        case FamilyKind::CompleteBipartite: {
            need_params(params, 2, "complete_bipartite");
            int m = params[0], n = params[1];
            if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: sizes must be positive");
            Graph g(m + n);
            for (int u = 0; u < m; ++u)
                for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
            return g;
        }
        case FamilyKind::CompleteMinusPerfectMatching: {
            need_params(params, 1, "complete_minus_perfect_matching");
            int n = params[0];
            if (n < 4 || n % 2 != 0)
                throw std::invalid_argument("complete_minus_perfect_matching: order must be even and >= 4");
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!(u % 2 == 0 && v == u + 1)) g.add_edge(u, v);  // matching (0,1),(2,3),...
            return g;
        }
        case FamilyKind::ComplementOfCirculant: {
            if (params.size() < 2)
                throw std::invalid_argument("complement_of_circulant: need order and chords");
            CirculantSpec spec(params[0], std::vector<int>(params.begin() + 1, params.end()));
            return circulant(spec).complement();
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace ebu
