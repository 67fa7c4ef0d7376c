#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ebu/graph.hpp"

namespace ebu {

/// Circulant graph C_k(L): vertices 0..k-1, i ~ i +/- j (mod k) for each
/// chord length j in L.
struct CirculantSpec {
    int order = 0;               // k >= 3
    std::vector<int> chords;     // distinct, sorted, each in [1, k/2]

    CirculantSpec() = default;
    CirculantSpec(int k, std::vector<int> l);  // validates and sorts

    std::string str() const;  // "C15(1,6)"
};

Graph circulant(const CirculantSpec& spec);

enum class FamilyKind {
    Complete,
    Cycle,
    Path,
    CompleteBipartite,
    CompleteMinusPerfectMatching,
    ComplementOfCirculant,
};

FamilyKind parse_family_kind(std::string_view name);
std::string family_kind_name(FamilyKind kind);

/// Standard families. params: Complete/Cycle/Path take {n};
/// CompleteBipartite {m,n}; CompleteMinusPerfectMatching {even n >= 4};
/// ComplementOfCirculant {k, j1, j2, ...}.
Graph family(FamilyKind kind, const std::vector<int>& params);

}  // namespace ebu
