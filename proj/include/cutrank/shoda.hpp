#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutrank/group.hpp"
#include "cutrank/rank.hpp"

namespace cutrank {

/**
 * A verified extremely strong Shoda pair (H, K) of a group G:
 *   (i)  K normal in H, H normal in G (hence H normal in N_G(K));
 *   (ii) H/K cyclic and a maximal abelian subgroup of N_G(K)/K;
 * H normal in G certifies the idempotent-orthogonality condition.
 *
 * The pair contributes φ([H:K]) / (k * [N_G(K):H]) - 1 to the central-unit
 * rank, where k = 1 if h h^x lies in K for some x in N_G(K) (h generating
 * H/K) and k = 2 otherwise.
 */
struct ShodaPair {
    Subgroup h;
    Subgroup k;
    int h_rep = 0;      // least element of H with <h_rep K> = H/K
    int k_invariant = 1;
    int index_hk = 1;   // [H:K]
    int index_nh = 1;   // [N_G(K):H]
    long long contrib_num = 0;
    long long contrib_den = 1; // reduced, contribution = num/den >= 0
};

struct EsspCheck {
    bool ok = false;
    std::string reason; // empty when ok; otherwise the first failed condition
};

/// Checks the extremely strong Shoda pair conditions. Throws
/// std::invalid_argument when K is not contained in H.
EsspCheck verify_esspair(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

/// 1 iff h * (x^-1 h x) lies in K for some x in N_G(K), else 2.
int k_invariant(const FiniteGroup& g, const Subgroup& k_sub, int h_rep);

/// Builds a verified pair with all derived fields; throws on verification
/// failure (message names the failed condition).
ShodaPair make_shoda_pair(const FiniteGroup& g, Subgroup h, Subgroup k);

/// Rank as the sum of pair contributions. Every term must be a non-negative
/// rational and the total an integer; anything else throws (an invalid or
/// incomplete pair set).
RankReport rank_from_pairs(const FiniteGroup& g, const std::vector<ShodaPair>& pairs);

/// A family group together with its literal pair set; every pair has passed
/// verify_esspair.
struct FamilyShoda {
    FiniteGroup group;
    std::vector<ShodaPair> pairs;
};

FamilyShoda shoda_pairs_cyclic(int n);
FamilyShoda shoda_pairs_dihedral(int n);
FamilyShoda shoda_pairs_quaternion(int m);

/// Pair set of C_{q^m} ⋊ C_{p^n} (faithful action): {(G,G)}, the (⟨a⟩,⟨a^{q^j1}⟩)
/// chain and the (G, ⟨a, b^{p^j2}⟩) chain. When r is given it must present a
/// faithful action (order of r mod q^m equal to p^n); otherwise the least
/// such residue is used.
FamilyShoda shoda_pairs_metacyclic_pq(int p, int n, int q, int m,
                                      std::optional<int> r = std::nullopt);

/// For a split metacyclic presentation with o the multiplicative order of r
/// mod n: the simple component attached to (⟨a, b^o⟩, ⟨b^o⟩) is an o-by-o
/// matrix algebra over a field of degree φ(n)/o.
struct ComponentShape {
    int matrix_size = 1;  // o
    int field_degree = 1; // φ(n)/o
};
ComponentShape component_center_degree(const MetacyclicParams& params);
ComponentShape component_center_degree(const FiniteGroup& g);

} // namespace cutrank
