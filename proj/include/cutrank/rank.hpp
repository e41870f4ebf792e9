#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutrank/group.hpp"
#include "cutrank/power_classes.hpp"

namespace cutrank {

enum class CutVerdict { Cut, EcutNotCut, NotEcut };
enum class RankMethod { FerrazOracle, ClosedForm, Shoda };

/// Rank of the free abelian part of the central units of the integral group
/// ring, with provenance. verdict is Cut iff rank 0, EcutNotCut iff rank 1.
struct RankReport {
    int rank = 0;
    CutVerdict verdict = CutVerdict::Cut;
    RankMethod method = RankMethod::FerrazOracle;
    int n_C = 0, n_R = 0, n_Q = 0;       // populated on the oracle path
    std::optional<EcutWitness> witness;  // populated on the oracle path
};

std::string cut_verdict_name(CutVerdict v);
std::string rank_method_name(RankMethod m);
CutVerdict verdict_from_rank(int rank);

/// The class-partition oracle: rank = n_R - n_Q.
RankReport rank_ferraz(const FiniteGroup& g);
RankReport rank_ferraz(const FiniteGroup& g, const ClassPartition& cp);

// Closed-form family ranks. Each equals the oracle on the constructed group
// (cross-validated by the acceptance suite); the floor reading of n/2 is the
// one the oracle confirms.
int rank_cyclic(int n);      // floor(n/2) + 1 - tau(n), n >= 1
int rank_dihedral(int n);    // floor(n/2) + 1 - tau(n), n >= 3
int rank_quaternion(int m);  // m + 1 - tau(2m),         m >= 2

/**
 * Rank of C_{q^m} ⋊ C_{p^n} with the cyclic p-part acting faithfully:
 *   p = 2:   2^{n-1} + (q^m - 1)/2^n     - n - m
 *   p odd:   (p^n - 1)/2 + (q^m - 1)/(2 p^n) - n - m
 * Exact integer arithmetic; throws std::invalid_argument when no faithful
 * action exists (p^n must divide φ(q^m) with q odd) or when an intermediate
 * fails to divide.
 *
 * Known subtlety pinned by a regression test: (p^n, q^m) = (4, 5) gives rank
 * 0, i.e. the Frobenius group of order 20 is cut; shorter cut-pair lists that
 * omit it disagree with both this formula and the class-partition oracle.
 */
int rank_metacyclic_pq(int p, int n, int q, int m);

/// The group C_{q^m} ⋊ C_{p^n} realised as a split metacyclic presentation,
/// using the least residue of multiplicative order p^n modulo q^m.
FiniteGroup metacyclic_pq_group(int p, int n, int q, int m, int cap = kDefaultOrderCap);

/// Abelian classification: Cut when the exponent divides 4 or 6; the only
/// non-cut ecut abelian groups are C5, C8 and C12.
enum class AbelianClass { CutExponent, EcutCyclicException, NotEcut };
AbelianClass classify_abelian(const std::vector<int>& factors);
std::string abelian_class_name(AbelianClass c);

/// Case analysis for ecut p-groups. Split2Group carries the witness: an
/// element x of order 8 whose R-class united with the R-class of x^3 is the
/// whole non-inverse-semi-rational set.
enum class PGroupCase { C5, Cut3Group, Cut2Group, Split2Group, NotEcut };
struct PGroupReport {
    PGroupCase tag = PGroupCase::NotEcut;
    int witness_x = -1;
    std::optional<EcutWitness> witness;
};
PGroupReport pgroup_ecut_case(const FiniteGroup& g);
std::string pgroup_case_name(PGroupCase c);

/// Case analysis for nilpotent ecut groups:
///   C5 | Cut3Group | Ecut2Group
///   Product2x3RealH:       G = H x K, H a real cut 2-group, K a cut 3-group
///   Product2x3SplitWitness: as above with H not real; some h with h !~ h^-1
///     exists such that for every nontrivial k in K the pair (h,k) lies in the
///     single split Q-class whose two R-classes are those of (h,k) and
///     (h,k^-1), and that Q-class is the whole non-inverse-semi-rational set
///   NotEcut otherwise.
enum class NilpotentCase { C5, Cut3Group, Ecut2Group, Product2x3RealH, Product2x3SplitWitness, NotEcut };
struct NilpotentReport {
    NilpotentCase tag = NilpotentCase::NotEcut;
    int witness_h = -1; // for Product2x3SplitWitness: the non-real element of H
};
NilpotentReport nilpotent_ecut_check(const FiniteGroup& g);
std::string nilpotent_case_name(NilpotentCase c);

/// Nilpotency via normality of all Sylow subgroups, each constructed as the
/// set of elements of prime-power order.
bool is_nilpotent(const FiniteGroup& g);

/// Sylow p-subgroup of a nilpotent group (the set of p-elements); throws when
/// that set is not a subgroup.
Subgroup nilpotent_sylow(const FiniteGroup& g, int p);

/// Solvability via the derived series reaching the trivial subgroup.
bool is_solvable(const FiniteGroup& g);

/// Necessary prime-spectrum conditions for solvable groups: a cut group has
/// all primes in {2,3,5,7}; an ecut-not-cut group has at most one prime
/// factor outside {2,3,5,7,13,17} and that prime lies in [11, 267].
/// Not applicable to NotEcut reports. Throws when g is not solvable.
struct SpectrumReport {
    bool applicable = false;
    bool consistent = true;
    std::vector<int> primes;    // primes dividing |G|
    std::vector<int> offending; // primes violating the condition
};
SpectrumReport prime_spectrum_check(const FiniteGroup& g, const RankReport& report);

} // namespace cutrank
