#include "cutrank/power_classes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cutrank {

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

/// Flatten a union-find over class ids into an element-level partition with
/// blocks ordered by minimal member.
Partition flatten(const FiniteGroup& g, const Partition& classes, DisjointSets& sets) {
    Partition part;
    part.block_of.assign(g.order(), -1);
    std::vector<int> root_block(classes.count(), -1);
    for (int x = 0; x < g.order(); ++x) {
        int root = sets.find(classes.block_of[x]);
        if (root_block[root] < 0) {
            root_block[root] = (int)part.blocks.size();
            part.blocks.emplace_back();
        }
        int id = root_block[root];
        part.block_of[x] = id;
        part.blocks[id].push_back(x);
    }
    return part; // blocks already sorted: elements visited in ascending order
}

} // namespace

ClassPartition class_partition(const FiniteGroup& g) {
    ClassPartition cp;
    cp.conj = conjugacy_classes(g);
    int nc = cp.conj.count();

    // R-classes: merge each class with the class of the inverses
    DisjointSets rsets(nc);
    for (int c = 0; c < nc; ++c) {
        int rep = cp.conj.blocks[c][0];
        rsets.unite(c, cp.conj.block_of[g.inv(rep)]);
    }
    cp.r_classes = flatten(g, cp.conj, rsets);

    // Q-classes: additionally merge classes of coprime powers (per block
    // representative; conjugate representatives give the same unions)
    DisjointSets qsets = rsets;
    for (int c = 0; c < nc; ++c) {
        int rep = cp.conj.blocks[c][0];
        int d = g.element_order(rep);
        for (int j = 2; j < d; ++j) {
            if (std::gcd(j, d) == 1) qsets.unite(c, cp.conj.block_of[g.power(rep, j)]);
        }
    }
    cp.q_classes = flatten(g, cp.conj, qsets);

    cp.n_C = cp.conj.count();
    cp.n_R = cp.r_classes.count();
    cp.n_Q = cp.q_classes.count();
    return cp;
}

ElementClassification classify_element(const FiniteGroup& g, const Partition& conj, int x) {
    ElementClassification result;
    int cls = conj.block_of[x];
    int inv_cls = conj.block_of[g.inv(x)];
    result.is_real = cls == inv_cls;

    int d = g.element_order(x);
    std::set<int> power_classes;
    for (int j = 1; j < std::max(d, 2); ++j) {
        if (std::gcd(j, d) == 1) power_classes.insert(conj.block_of[g.power(x, j)]);
    }

    if (power_classes.size() == 1) {
        result.tag = Rationality::Rational;
    } else if (power_classes.size() == 2) {
        // exactly one fixed power class besides the element's own; inverse
        // semi-rational when that second class is the class of x^-1
        bool second_is_inverse = !result.is_real && power_classes.count(inv_cls) > 0;
        result.tag = second_is_inverse ? Rationality::InverseSemiRational
                                       : Rationality::SemiRational;
    } else {
        result.tag = Rationality::None;
    }
    return result;
}

ElementClassification classify_element(const FiniteGroup& g, int x) {
    return classify_element(g, conjugacy_classes(g), x);
}

std::string rationality_name(Rationality r) {
    switch (r) {
    case Rationality::Rational: return "RATIONAL";
    case Rationality::InverseSemiRational: return "INVERSE_SEMI_RATIONAL";
    case Rationality::SemiRational: return "SEMI_RATIONAL";
    case Rationality::None: return "NONE";
    }
    return "NONE";
}

std::vector<int> inverse_semi_rational_set(const FiniteGroup& g, const ClassPartition& cp) {
    // x is inverse semi-rational iff its Q-block coincides with its R-block
    std::vector<int> s;
    for (const auto& q_block : cp.q_classes.blocks) {
        int first_r = cp.r_classes.block_of[q_block[0]];
        bool single_r = std::all_of(q_block.begin(), q_block.end(), [&](int x) {
            return cp.r_classes.block_of[x] == first_r;
        });
        if (single_r) s.insert(s.end(), q_block.begin(), q_block.end());
    }
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<int> inverse_semi_rational_set(const FiniteGroup& g) {
    return inverse_semi_rational_set(g, class_partition(g));
}

EcutWitness ecut_witness(const FiniteGroup& g, const ClassPartition& cp) {
    EcutWitness w;
    int split_blocks = 0;
    int split_q = -1;
    std::vector<int> split_r_ids;
    for (int q = 0; q < cp.q_classes.count(); ++q) {
        std::set<int> r_ids;
        for (int x : cp.q_classes.blocks[q]) r_ids.insert(cp.r_classes.block_of[x]);
        if (r_ids.size() > 1) {
            ++split_blocks;
            split_q = q;
            split_r_ids.assign(r_ids.begin(), r_ids.end());
        }
    }
    if (split_blocks == 0) {
        w.verdict = EcutVerdict::AllInverseSemiRational;
        return w;
    }
    if (split_blocks == 1 && split_r_ids.size() == 2) {
        w.verdict = EcutVerdict::SingleSplitQClass;
        w.q_block = cp.q_classes.blocks[split_q];
        w.r_blocks[0] = cp.r_classes.blocks[split_r_ids[0]];
        w.r_blocks[1] = cp.r_classes.blocks[split_r_ids[1]];
        return w;
    }
    w.verdict = EcutVerdict::NotEcut;
    return w;
}

EcutWitness ecut_witness(const FiniteGroup& g) { return ecut_witness(g, class_partition(g)); }

std::string ecut_verdict_name(EcutVerdict v) {
    switch (v) {
    case EcutVerdict::AllInverseSemiRational: return "ALL_ISR";
    case EcutVerdict::SingleSplitQClass: return "SINGLE_SPLIT_QCLASS";
    case EcutVerdict::NotEcut: return "NOT_ECUT";
    }
    return "NOT_ECUT";
}

} // namespace cutrank
