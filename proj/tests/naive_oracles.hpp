#pragma once

// Brute-force reference implementations used only by tests. They deliberately
// avoid the library's algorithmic shortcuts: conjugation orbits run over all
// elements (no generator BFS) and Q-classes merge powers coprime to the group
// exponent (not to the element order), so agreement is meaningful.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cutrank/group.hpp"

namespace naive {

inline std::vector<std::vector<int>> conjugacy_classes(const cutrank::FiniteGroup& g) {
    std::vector<int> cls(g.order(), -1);
    std::vector<std::vector<int>> blocks;
    for (int x = 0; x < g.order(); ++x) {
        if (cls[x] >= 0) continue;
        std::set<int> orbit;
        for (int y = 0; y < g.order(); ++y) orbit.insert(g.conjugate(y, x));
        int id = (int)blocks.size();
        blocks.emplace_back(orbit.begin(), orbit.end());
        for (int z : blocks.back()) cls[z] = id;
    }
    return blocks;
}

struct NaivePartition {
    std::vector<std::vector<int>> conj, r_blocks, q_blocks;
};

inline std::vector<std::vector<int>> merge_blocks(int order,
                                                  const std::vector<std::vector<int>>& blocks,
                                                  const std::vector<std::pair<int, int>>& unions,
                                                  const std::vector<int>& block_of) {
    std::vector<int> parent(blocks.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (auto [a, b] : unions) {
        int ra = find(block_of[a]), rb = find(block_of[b]);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::map<int, std::vector<int>> grouped;
    for (int x = 0; x < order; ++x) grouped[find(block_of[x])].push_back(x);
    std::vector<std::vector<int>> result;
    std::map<int, std::vector<int>> by_min;
    for (auto& [root, members] : grouped) by_min[members.front()] = members;
    for (auto& [mn, members] : by_min) result.push_back(members);
    return result;
}

inline NaivePartition class_partition(const cutrank::FiniteGroup& g) {
    NaivePartition np;
    np.conj = naive::conjugacy_classes(g);
    std::vector<int> block_of(g.order());
    for (std::size_t b = 0; b < np.conj.size(); ++b)
        for (int x : np.conj[b]) block_of[x] = (int)b;

    std::vector<std::pair<int, int>> r_unions;
    for (int x = 0; x < g.order(); ++x) r_unions.push_back({x, g.inv(x)});
    np.r_blocks = merge_blocks(g.order(), np.conj, r_unions, block_of);

    // Q-classes via powers coprime to the group exponent, for every element
    int e = g.exponent();
    std::vector<std::pair<int, int>> q_unions = r_unions;
    for (int x = 0; x < g.order(); ++x) {
        for (int i = 1; i <= e; ++i) {
            if (std::gcd(i, e) == 1) q_unions.push_back({x, g.power(x, i)});
        }
    }
    np.q_blocks = merge_blocks(g.order(), np.conj, q_unions, block_of);
    return np;
}

inline int rank(const cutrank::FiniteGroup& g) {
    NaivePartition np = naive::class_partition(g);
    return (int)np.r_blocks.size() - (int)np.q_blocks.size();
}

inline std::vector<int> block_sizes(const std::vector<std::vector<int>>& blocks) {
    std::vector<int> sizes;
    for (const auto& b : blocks) sizes.push_back((int)b.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

/// Invariant factors of the abelian group presented by relations
/// a^n = 1, b^t = a^l, ab = ba, via the Smith normal form of [[n,0],[-l,t]].
/// Independent of the group-construction route.
inline std::vector<int> smith_invariants(long long n, long long t, long long l) {
    long long a = n, b = 0, c = -l, d = t;
    // 2x2 integer Smith normal form by gcd reduction
    auto swap_rows = [&] { std::swap(a, c); std::swap(b, d); };
    auto swap_cols = [&] { std::swap(a, b); std::swap(c, d); };
    for (;;) {
        if (a == 0) { if (c != 0) swap_rows(); else swap_cols(); }
        if (a == 0) break;
        if (c % a != 0) { long long q = c / a; c -= q * a; d -= q * b; swap_rows(); continue; }
        if (b % a != 0) { long long q = b / a; b -= q * a; d -= q * c; swap_cols(); continue; }
        // eliminate
        { long long q = c / a; c -= q * a; d -= q * b; }
        { long long q = b / a; b -= q * a; d -= q * c; }
        break;
    }
    long long d1 = std::abs(a), d2 = std::abs(d);
    if (d1 != 0 && d2 % d1 != 0) {
        long long g = std::gcd(d1, d2);
        d2 = d1 / g * d2;
        d1 = g;
    }
    std::vector<int> factors;
    if (d2 > 1) factors.push_back((int)d2);
    if (d1 > 1) factors.push_back((int)d1);
    std::sort(factors.rbegin(), factors.rend());
    return factors;
}

} // namespace naive
