#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutrank/metacyclic.hpp"

namespace cutrank {

struct Subgroup;
class FiniteGroup;

/// Default ceiling on the order of any constructed group. The classification
/// sweep tops out at order 1080; the cap leaves headroom for wider sweeps.
inline constexpr int kDefaultOrderCap = 2048;

/// Default node budget for the isomorphism backtracking search.
inline constexpr long long kDefaultIsoBudget = 200'000'000;

/**
 * Immutable finite group on element indices 0..order-1 with exact integer
 * arithmetic. The identity is always index 0.
 *
 * Representation is either a dense multiplication table or, for groups built
 * from a metacyclic presentation, the normal-form word arithmetic of
 * MetacyclicParams (index of a^i b^j is j*n + i) with no stored table.
 * All operations are pure; instances are safe to share across threads.
 */
class FiniteGroup {
public:
    // --- factories ------------------------------------------------------
    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    /// Direct product of cyclic groups; the list is normalised to
    /// invariant-factor form first. Empty list gives the trivial group.
    static FiniteGroup abelian(const std::vector<int>& factors);
    /// < a, b : a^n = 1, b^2 = 1, b a b^-1 = a^-1 >, order 2n, n >= 3.
    static FiniteGroup dihedral(int n);
    /// < a, b : a^2m = 1, b^2 = a^m, b a b^-1 = a^-1 >, order 4m, m >= 2.
    static FiniteGroup generalized_quaternion(int m);
    static FiniteGroup split_metacyclic(const MetacyclicParams& params, int cap = kDefaultOrderCap);
    static FiniteGroup split_metacyclic(int n, int t, int l, int r, int cap = kDefaultOrderCap);
    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                      int cap = kDefaultOrderCap);
    /// Dense Cayley table, table[g][h] = g*h, identity at index 0.
    /// Validates the group axioms (associativity exhaustively up to order 256,
    /// sampled above).
    static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table,
                                         int cap = kDefaultOrderCap);

    // --- element arithmetic ----------------------------------------------
    int order() const noexcept { return order_; }
    int identity() const noexcept { return 0; }

    int mul(int g, int h) const {
        if (!table_.empty()) return table_[(std::size_t)g * order_ + h];
        int i1 = g % wn_, j1 = g / wn_;
        int i2 = h % wn_, j2 = h / wn_;
        int j = j1 + j2;
        long long i = i1 + (long long)i2 * rpow_[j1];
        if (j >= wt_) {
            j -= wt_;
            i += wl_;
        }
        return j * wn_ + (int)(i % wn_);
    }

    int inv(int g) const { return inv_[g]; }

    /// x g x^-1
    int conjugate(int x, int g) const { return mul(mul(x, g), inv_[x]); }

    /// g^e for e >= 0.
    int power(int g, long long e) const;

    /// Multiplicative order of the element.
    int element_order(int g) const;

    /// Orders of all elements (computed on demand).
    std::vector<int> element_orders() const;

    /// lcm of all element orders.
    int exponent() const;

    bool is_abelian() const;

    const std::vector<int>& generators() const noexcept { return generators_; }

    /// Engaged when the group was built from a metacyclic presentation.
    const std::optional<MetacyclicParams>& word_form() const noexcept { return word_; }

    /// Same group re-represented with an explicit dense table.
    FiniteGroup with_table() const;

    /// Checks associativity, identity and inverses. Exhaustive associativity
    /// up to `assoc_limit` order; throws std::logic_error on violation.
    void validate_axioms(int assoc_limit = 256) const;

    /// Human-readable element name: "e", "a^2 b", or "g17" without word form.
    std::string element_name(int g) const;

private:
    FiniteGroup() = default;
    void finish_table_init(); // inverses from table_
    void set_word(const MetacyclicParams& p);

    friend std::pair<FiniteGroup, std::vector<int>> quotient(const FiniteGroup&, const Subgroup&);
    friend std::pair<FiniteGroup, std::vector<int>> subgroup_as_group(const FiniteGroup&,
                                                                      const Subgroup&);

    int order_ = 1;
    std::vector<uint16_t> table_;          // dense rep; empty for word rep
    std::optional<MetacyclicParams> word_; // engaged for word rep (and kept on with_table copies)
    int wn_ = 1, wt_ = 1, wl_ = 0;         // word rep: n, t, l mod n
    std::vector<int> rpow_;                // r^j mod n for 0 <= j < t
    std::vector<int> inv_;
    std::vector<int> generators_;
    std::vector<std::pair<int, int>> order_factors_; // factorisation of order_
};

// --- subgroups ------------------------------------------------------------

/// Subgroup of a parent group as a sorted element-index set containing 0.
struct Subgroup {
    std::vector<int> elems;

    int order() const noexcept { return (int)elems.size(); }
    bool contains(int g) const;
    bool operator==(const Subgroup&) const = default;
};

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup();

/// Smallest subgroup containing `seed`.
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed);

bool is_subgroup(const FiniteGroup& g, const Subgroup& h);

/// Normalizer N_G(K) = { x : x K x^-1 = K }, computed exhaustively.
Subgroup normalizer(const FiniteGroup& g, const Subgroup& k);

/// Centralizer of a set of elements, computed exhaustively.
Subgroup centralizer(const FiniteGroup& g, const std::vector<int>& s);

Subgroup center(const FiniteGroup& g);

/// Is H normal in the subgroup `ambient` (both subgroups of g)?
bool is_normal_in(const FiniteGroup& g, const Subgroup& h, const Subgroup& ambient);

/// Derived subgroup [G, G].
Subgroup derived_subgroup(const FiniteGroup& g);

/// Coset group G/N and the projection map element -> coset index.
/// Cosets are indexed by their minimal member, ascending; throws
/// std::invalid_argument when N is not normal.
std::pair<FiniteGroup, std::vector<int>> quotient(const FiniteGroup& g, const Subgroup& n);

/// The subgroup as a standalone group plus the embedding index map
/// (new index -> parent index).
std::pair<FiniteGroup, std::vector<int>> subgroup_as_group(const FiniteGroup& g,
                                                           const Subgroup& h);

// --- partitions -------------------------------------------------------------

/// Partition of the element indices; blocks are sorted internally and ordered
/// by their minimal member.
struct Partition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;

    int count() const noexcept { return (int)blocks.size(); }
};

Partition conjugacy_classes(const FiniteGroup& g);

// --- isomorphism -------------------------------------------------------------

/// Verified isomorphism: map[g*h] == map[g]*map[h] for all pairs.
struct Isomorphism {
    std::vector<int> map;
};

enum class IsoVerdict { Isomorphic, NonIsomorphic, Undecided };

struct IsoResult {
    IsoVerdict verdict;
    std::optional<Isomorphism> iso; // engaged iff Isomorphic
    long long nodes_used = 0;
};

/// Cheap isomorphism invariants; equality is necessary for isomorphism.
struct GroupFingerprint {
    int order = 1;
    std::vector<std::pair<int, int>> order_histogram; // (element order, count)
    std::vector<int> class_sizes;                     // ascending
    int center_order = 1;
    int derived_order = 1;
    std::vector<int> abelianization; // invariant factors of G/[G,G]

    auto operator<=>(const GroupFingerprint&) const = default;
    std::string to_string() const;
};

GroupFingerprint fingerprint(const FiniteGroup& g);

/// Fingerprint rejection followed by backtracking over generator images,
/// generators in decreasing element order, candidate images filtered by
/// (element order, class size, r-class size, q-class size). A definitive
/// negative exhausts the candidate space; Undecided is returned only when the
/// node budget runs out.
IsoResult is_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                        long long node_budget = kDefaultIsoBudget);

/// Invariant factors of an abelian group (throws if not abelian).
std::vector<int> abelian_invariants(const FiniteGroup& g);

} // namespace cutrank
