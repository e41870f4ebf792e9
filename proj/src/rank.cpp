#include "cutrank/rank.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cutrank/error.hpp"
#include "cutrank/numtheory.hpp"

namespace cutrank {

std::string cut_verdict_name(CutVerdict v) {
    switch (v) {
    case CutVerdict::Cut: return "CUT";
    case CutVerdict::EcutNotCut: return "ECUT_NOT_CUT";
    case CutVerdict::NotEcut: return "NOT_ECUT";
    }
    return "NOT_ECUT";
}

std::string rank_method_name(RankMethod m) {
    switch (m) {
    case RankMethod::FerrazOracle: return "FERRAZ_ORACLE";
    case RankMethod::ClosedForm: return "CLOSED_FORM";
    case RankMethod::Shoda: return "SHODA";
    }
    return "FERRAZ_ORACLE";
}

CutVerdict verdict_from_rank(int rank) {
    if (rank == 0) return CutVerdict::Cut;
    if (rank == 1) return CutVerdict::EcutNotCut;
    return CutVerdict::NotEcut;
}

RankReport rank_ferraz(const FiniteGroup& g, const ClassPartition& cp) {
    RankReport report;
    report.method = RankMethod::FerrazOracle;
    report.n_C = cp.n_C;
    report.n_R = cp.n_R;
    report.n_Q = cp.n_Q;
    report.rank = cp.n_R - cp.n_Q;
    report.verdict = verdict_from_rank(report.rank);
    report.witness = ecut_witness(g, cp);
    return report;
}

RankReport rank_ferraz(const FiniteGroup& g) { return rank_ferraz(g, class_partition(g)); }

int rank_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("rank_cyclic: n must be >= 1");
    return n / 2 + 1 - nt::divisor_count(n);
}

int rank_dihedral(int n) {
    if (n < 3) throw std::invalid_argument("rank_dihedral: n must be >= 3");
    return n / 2 + 1 - nt::divisor_count(n);
}

int rank_quaternion(int m) {
    if (m < 2) throw std::invalid_argument("rank_quaternion: m must be >= 2");
    return m + 1 - nt::divisor_count(2 * m);
}

namespace {

long long int_pow(int base, int exp) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

void check_pq_args(int p, int n, int q, int m, long long& pn, long long& qm) {
    if (!nt::is_prime(p) || !nt::is_prime(q) || p == q)
        throw std::invalid_argument("rank_metacyclic_pq: p and q must be distinct primes");
    if (n < 1 || m < 1) throw std::invalid_argument("rank_metacyclic_pq: n, m must be >= 1");
    pn = int_pow(p, n);
    qm = int_pow(q, m);
    // faithful action needs an element of order p^n in the unit group mod
    // q^m, which is cyclic of order φ(q^m) only for odd q
    long long phi = qm / q * (q - 1);
    if (q == 2 || phi % pn != 0)
        throw std::invalid_argument("rank_metacyclic_pq: no faithful action (p^n must divide φ(q^m), q odd)");
}

} // namespace

int rank_metacyclic_pq(int p, int n, int q, int m) {
    long long pn, qm;
    check_pq_args(p, n, q, m, pn, qm);

    long long rank;
    if (p == 2) {
        long long half = int_pow(2, n);
        if ((qm - 1) % half != 0)
            throw std::invalid_argument("rank_metacyclic_pq: 2^n does not divide q^m - 1");
        rank = int_pow(2, n - 1) + (qm - 1) / half - n - m;
    } else {
        if ((qm - 1) % (2 * pn) != 0)
            throw std::invalid_argument("rank_metacyclic_pq: 2*p^n does not divide q^m - 1");
        rank = (pn - 1) / 2 + (qm - 1) / (2 * pn) - n - m;
    }
    if (rank < 0) throw Error(Errc::Internal, "rank_metacyclic_pq: negative rank");
    return (int)rank;
}

FiniteGroup metacyclic_pq_group(int p, int n, int q, int m, int cap) {
    long long pn, qm;
    check_pq_args(p, n, q, m, pn, qm);
    // least residue of multiplicative order exactly p^n
    for (int r = 2; r < qm; ++r) {
        if (std::gcd<long long>(r, qm) != 1) continue;
        if (nt::mult_order_mod(r, (int)qm) == pn) {
            return FiniteGroup::split_metacyclic((int)qm, (int)pn, (int)qm, r, cap);
        }
    }
    throw Error(Errc::Internal, "metacyclic_pq_group: no residue of the required order");
}

AbelianClass classify_abelian(const std::vector<int>& factors) {
    auto invariants = nt::invariant_factors(factors);
    int exponent = invariants.empty() ? 1 : invariants[0];
    if (4 % exponent == 0 || 6 % exponent == 0) return AbelianClass::CutExponent;
    bool cyclic = invariants.size() == 1;
    if (cyclic && (exponent == 5 || exponent == 8 || exponent == 12))
        return AbelianClass::EcutCyclicException;
    return AbelianClass::NotEcut;
}

std::string abelian_class_name(AbelianClass c) {
    switch (c) {
    case AbelianClass::CutExponent: return "CUT_EXPONENT";
    case AbelianClass::EcutCyclicException: return "ECUT_CYCLIC_EXCEPTION";
    case AbelianClass::NotEcut: return "NOT_ECUT";
    }
    return "NOT_ECUT";
}

PGroupReport pgroup_ecut_case(const FiniteGroup& g) {
    auto factors = nt::factorize(g.order());
    if (factors.size() > 1)
        throw std::invalid_argument("pgroup_ecut_case: order is not a prime power");
    int p = factors.empty() ? 2 : factors[0].first;

    ClassPartition cp = class_partition(g);
    int rank = cp.n_R - cp.n_Q;
    PGroupReport report;
    if (rank >= 2) {
        report.tag = PGroupCase::NotEcut;
        return report;
    }
    if (p == 5) {
        if (g.order() != 5 || rank != 1)
            throw Error(Errc::Internal, "pgroup_ecut_case: ecut 5-group other than C5");
        report.tag = PGroupCase::C5;
        return report;
    }
    if (p == 3) {
        if (rank != 0) throw Error(Errc::Internal, "pgroup_ecut_case: ecut 3-group that is not cut");
        report.tag = PGroupCase::Cut3Group;
        return report;
    }
    if (p != 2) throw Error(Errc::Internal, "pgroup_ecut_case: ecut p-group with p not in {2,3,5}");
    if (rank == 0) {
        report.tag = PGroupCase::Cut2Group;
        return report;
    }

    // rank 1: find x of order 8 whose R-class united with that of x^3 covers
    // the whole non-inverse-semi-rational set
    EcutWitness witness = ecut_witness(g, cp);
    if (witness.verdict != EcutVerdict::SingleSplitQClass)
        throw Error(Errc::Internal, "pgroup_ecut_case: rank-1 2-group without a split witness");
    for (int x : witness.q_block) {
        if (g.element_order(x) != 8) continue;
        int x3 = g.power(x, 3);
        int rx = cp.r_classes.block_of[x];
        int rx3 = cp.r_classes.block_of[x3];
        std::set<int> blocks{rx, rx3};
        std::set<int> witness_blocks{cp.r_classes.block_of[witness.r_blocks[0][0]],
                                     cp.r_classes.block_of[witness.r_blocks[1][0]]};
        if (blocks == witness_blocks) {
            report.tag = PGroupCase::Split2Group;
            report.witness_x = x;
            report.witness = witness;
            return report;
        }
    }
    throw Error(Errc::Internal, "pgroup_ecut_case: no order-8 split witness found");
}

std::string pgroup_case_name(PGroupCase c) {
    switch (c) {
    case PGroupCase::C5: return "C5";
    case PGroupCase::Cut3Group: return "CUT_3GROUP";
    case PGroupCase::Cut2Group: return "CUT_2GROUP";
    case PGroupCase::Split2Group: return "SPLIT_2GROUP";
    case PGroupCase::NotEcut: return "NOT_ECUT";
    }
    return "NOT_ECUT";
}

Subgroup nilpotent_sylow(const FiniteGroup& g, int p) {
    Subgroup s;
    for (int x = 0; x < g.order(); ++x) {
        int o = g.element_order(x);
        while (o % p == 0) o /= p;
        if (o == 1) s.elems.push_back(x);
    }
    long long ppart = 1;
    for (auto [q, e] : nt::factorize(g.order())) {
        if (q == p)
            for (int i = 0; i < e; ++i) ppart *= p;
    }
    if ((long long)s.order() != ppart || !is_subgroup(g, s))
        throw std::invalid_argument("nilpotent_sylow: p-elements do not form a Sylow subgroup");
    return s;
}

bool is_nilpotent(const FiniteGroup& g) {
    for (int p : nt::prime_divisors(g.order())) {
        try {
            nilpotent_sylow(g, p);
        } catch (const std::invalid_argument&) {
            return false;
        }
    }
    return true;
}

NilpotentReport nilpotent_ecut_check(const FiniteGroup& g) {
    if (!is_nilpotent(g)) throw std::invalid_argument("nilpotent_ecut_check: group is not nilpotent");

    NilpotentReport report;
    auto primes = nt::prime_divisors(g.order());

    ClassPartition cp = class_partition(g);
    int rank = cp.n_R - cp.n_Q;

    if (g.order() == 1 || primes == std::vector<int>{2}) {
        report.tag = rank <= 1 ? NilpotentCase::Ecut2Group : NilpotentCase::NotEcut;
        return report;
    }
    if (primes == std::vector<int>{3}) {
        report.tag = rank == 0 ? NilpotentCase::Cut3Group : NilpotentCase::NotEcut;
        if (rank == 1) throw Error(Errc::Internal, "nilpotent_ecut_check: ecut 3-group that is not cut");
        return report;
    }
    if (g.order() == 5) {
        report.tag = NilpotentCase::C5;
        return report;
    }
    if (primes != std::vector<int>{2, 3}) {
        report.tag = NilpotentCase::NotEcut;
        return report;
    }

    // G = H x K with H the Sylow 2-subgroup and K the Sylow 3-subgroup
    Subgroup h_sub = nilpotent_sylow(g, 2);
    Subgroup k_sub = nilpotent_sylow(g, 3);
    auto [h_group, h_embed] = subgroup_as_group(g, h_sub);
    auto [k_group, k_embed] = subgroup_as_group(g, k_sub);
    if (rank_ferraz(h_group).rank != 0 || rank_ferraz(k_group).rank != 0) {
        report.tag = NilpotentCase::NotEcut;
        return report;
    }

    // real test for H runs inside H itself
    Partition h_classes = conjugacy_classes(h_group);
    int non_real = -1;
    for (int x = 0; x < h_group.order(); ++x) {
        if (h_classes.block_of[x] != h_classes.block_of[h_group.inv(x)]) {
            non_real = x;
            break;
        }
    }
    if (non_real < 0) {
        report.tag = NilpotentCase::Product2x3RealH;
        return report;
    }

    // H not real: the only remaining ecut shape is the single split Q-class
    // generated by (h, k) for every nontrivial k in K
    EcutWitness witness = ecut_witness(g, cp);
    if (witness.verdict != EcutVerdict::SingleSplitQClass) {
        report.tag = NilpotentCase::NotEcut;
        return report;
    }
    int h_elem = h_embed[non_real];
    std::set<int> witness_blocks{cp.r_classes.block_of[witness.r_blocks[0][0]],
                                 cp.r_classes.block_of[witness.r_blocks[1][0]]};
    int witness_q = cp.q_classes.block_of[witness.q_block[0]];
    for (int kk = 0; kk < k_group.order(); ++kk) {
        if (kk == 0) continue;
        int k_elem = k_embed[kk];
        int hk = g.mul(h_elem, k_elem);
        int hk_inv = g.mul(h_elem, g.inv(k_elem));
        std::set<int> blocks{cp.r_classes.block_of[hk], cp.r_classes.block_of[hk_inv]};
        if (cp.q_classes.block_of[hk] != witness_q || blocks != witness_blocks) {
            report.tag = NilpotentCase::NotEcut;
            return report;
        }
    }
    report.tag = NilpotentCase::Product2x3SplitWitness;
    report.witness_h = h_elem;
    return report;
}

std::string nilpotent_case_name(NilpotentCase c) {
    switch (c) {
    case NilpotentCase::C5: return "C5";
    case NilpotentCase::Cut3Group: return "CUT_3GROUP";
    case NilpotentCase::Ecut2Group: return "ECUT_2GROUP";
    case NilpotentCase::Product2x3RealH: return "PRODUCT_2X3_REAL_H";
    case NilpotentCase::Product2x3SplitWitness: return "PRODUCT_2X3_SPLIT_WITNESS";
    case NilpotentCase::NotEcut: return "NOT_ECUT";
    }
    return "NOT_ECUT";
}

bool is_solvable(const FiniteGroup& g) {
    Subgroup current = whole_group(g);
    while (current.order() > 1) {
        auto [sub, embed] = subgroup_as_group(g, current);
        Subgroup derived_local = derived_subgroup(sub);
        Subgroup derived_parent;
        for (int x : derived_local.elems) derived_parent.elems.push_back(embed[x]);
        std::sort(derived_parent.elems.begin(), derived_parent.elems.end());
        if (derived_parent.order() == current.order()) return false; // series stalled
        current = std::move(derived_parent);
    }
    return true;
}

SpectrumReport prime_spectrum_check(const FiniteGroup& g, const RankReport& report) {
    if (!is_solvable(g)) throw std::invalid_argument("prime_spectrum_check: group is not solvable");

    SpectrumReport result;
    result.primes = nt::prime_divisors(g.order());
    if (report.verdict == CutVerdict::Cut) {
        result.applicable = true;
        for (int p : result.primes) {
            if (p != 2 && p != 3 && p != 5 && p != 7) result.offending.push_back(p);
        }
        result.consistent = result.offending.empty();
    } else if (report.verdict == CutVerdict::EcutNotCut) {
        result.applicable = true;
        std::vector<int> extra;
        for (int p : result.primes) {
            if (p != 2 && p != 3 && p != 5 && p != 7 && p != 13 && p != 17) extra.push_back(p);
        }
        if (extra.size() > 1) {
            result.offending = extra;
        } else if (extra.size() == 1 && (extra[0] < 11 || extra[0] > 267)) {
            result.offending = extra;
        }
        result.consistent = result.offending.empty();
    }
    return result;
}

} // namespace cutrank
