#pragma once

#include "ebu/families.hpp"
#include "ebu/graph.hpp"
#include "ebu/rational.hpp"

namespace ebu {

/// Invariants of the Nicoloso-Pietropaoli isomorphism test for connected
/// tetravalent circulants C_k(a,b). lambda is the least nonnegative solution
/// of gcd(k,a)*b = lambda*a (mod k); Lambda = lambda / gcd(k,b).
struct CirculantIsoParams {
    int k = 0;
    int a = 0;
    int b = 0;
    long long lambda = 0;
    Rational Lambda;
};

/// Throws if C_k(a,b) is disconnected (gcd(k,a,b) > 1).
CirculantIsoParams circulant_lambda(int k, int a, int b);

/// Decides C_k(a,b) ~ C_k(a',b') by the two gcd/Lambda conditions, with
/// Lambda equality evaluated up to sign (lambda vs -lambda mod k/gcd(k,a)).
/// The literal transcription rejects known-isomorphic pairs such as
/// C_15(1,2) ~ C_15(1,7); the sign-relaxed reading is validated against the
/// canonical-form oracle in the test suite.
bool circulant_isomorphic(int k, std::pair<int, int> p, std::pair<int, int> q);

/// Wilson-Potocnik criterion for a tetravalent circulant C_k(1,b) with
/// 2 <= b <= (k-1)/2: edge-transitive iff b^2 = +/-1 (mod k), or k = 2m is
/// even and C_k(1,b) is isomorphic to C_2m(1,m+1) (chord m+1 is taken as its
/// equivalent m-1, which stays within [1, k/2]).
bool tetravalent_circulant_edge_transitive(int k, int b);

/// Miklavic-Potocnik classification: a connected circulant is
/// distance-regular iff it is a cycle, a complete graph, a complete
/// multipartite graph, K_{m,m} minus a perfect matching with m odd, or a
/// Paley graph of prime order. Decided structurally, no BFS layer check.
bool circulant_distance_regular(const CirculantSpec& spec);

}  // namespace ebu
