#include "cutrank/shoda.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cutrank/error.hpp"
#include "cutrank/numtheory.hpp"

namespace cutrank {

namespace {

int position_in(const std::vector<int>& sorted, int value) {
    return (int)(std::lower_bound(sorted.begin(), sorted.end(), value) - sorted.begin());
}

struct QuotientView {
    FiniteGroup n_group;        // N_G(K) as a standalone group
    std::vector<int> n_embed;   // N index -> parent index
    FiniteGroup q_group;        // N_G(K)/K
    std::vector<int> proj;      // N index -> Q index
    Subgroup h_image;           // image of H in Q
};

QuotientView build_quotient_view(const FiniteGroup& g, const Subgroup& h, const Subgroup& k,
                                 const Subgroup& n_sub) {
    auto [n_group, n_embed] = subgroup_as_group(g, n_sub);

    Subgroup k_in_n;
    for (int x : k.elems) k_in_n.elems.push_back(position_in(n_embed, x));
    auto [q_group, proj] = quotient(n_group, k_in_n);

    std::vector<int> img;
    for (int x : h.elems) img.push_back(proj[position_in(n_embed, x)]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return QuotientView{std::move(n_group), std::move(n_embed), std::move(q_group),
                        std::move(proj), Subgroup{std::move(img)}};
}

} // namespace

EsspCheck verify_esspair(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    if (!is_subgroup(g, h) || !is_subgroup(g, k))
        throw std::invalid_argument("verify_esspair: H and K must be subgroups");
    if (!std::includes(h.elems.begin(), h.elems.end(), k.elems.begin(), k.elems.end()))
        throw std::invalid_argument("verify_esspair: K is not contained in H");

    if (!is_normal_in(g, k, h)) return {false, "(i) K not normal in H"};
    if (!is_normal_in(g, h, whole_group(g))) return {false, "(i) H not normal in G"};

    Subgroup n_sub = normalizer(g, k);
    QuotientView view = build_quotient_view(g, h, k, n_sub);

    int index_hk = h.order() / k.order();
    bool cyclic = false;
    for (int x : view.h_image.elems) {
        if (view.q_group.element_order(x) == index_hk) {
            cyclic = true;
            break;
        }
    }
    if (!cyclic) return {false, "(ii) H/K not cyclic"};

    Subgroup cent = centralizer(view.q_group, view.h_image.elems);
    if (!(cent == view.h_image))
        return {false, "(ii) H/K not maximal abelian in N_G(K)/K"};

    return {true, ""};
}

int k_invariant(const FiniteGroup& g, const Subgroup& k_sub, int h_rep) {
    Subgroup n_sub = normalizer(g, k_sub);
    for (int x : n_sub.elems) {
        int conj = g.mul(g.mul(g.inv(x), h_rep), x); // h^x = x^-1 h x
        if (k_sub.contains(g.mul(h_rep, conj))) return 1;
    }
    return 2;
}

ShodaPair make_shoda_pair(const FiniteGroup& g, Subgroup h, Subgroup k) {
    std::sort(h.elems.begin(), h.elems.end());
    std::sort(k.elems.begin(), k.elems.end());

    EsspCheck check = verify_esspair(g, h, k);
    if (!check.ok)
        throw std::invalid_argument("make_shoda_pair: not an extremely strong Shoda pair: " +
                                    check.reason);

    ShodaPair pair;
    pair.index_hk = h.order() / k.order();

    Subgroup n_sub = normalizer(g, k);
    pair.index_nh = n_sub.order() / h.order();

    // least element of H generating H/K
    QuotientView view = build_quotient_view(g, h, k, n_sub);
    pair.h_rep = -1;
    for (int x : h.elems) {
        int img = view.proj[position_in(view.n_embed, x)];
        if (view.q_group.element_order(img) == pair.index_hk) {
            pair.h_rep = x;
            break;
        }
    }

    pair.k_invariant = k_invariant(g, k, pair.h_rep);

    long long den = (long long)pair.k_invariant * pair.index_nh;
    long long num = nt::totient(pair.index_hk) - den;
    long long common = std::gcd(num < 0 ? -num : num, den);
    if (common > 0) {
        num /= common;
        den /= common;
    }
    pair.contrib_num = num;
    pair.contrib_den = den;
    pair.h = std::move(h);
    pair.k = std::move(k);
    return pair;
}

RankReport rank_from_pairs(const FiniteGroup& g, const std::vector<ShodaPair>& pairs) {
    (void)g;
    long long sum_num = 0, sum_den = 1;
    for (const auto& pair : pairs) {
        if (pair.contrib_num < 0)
            throw std::invalid_argument("rank_from_pairs: negative contribution (invalid pair set)");
        sum_num = sum_num * pair.contrib_den + pair.contrib_num * sum_den;
        sum_den *= pair.contrib_den;
        long long common = std::gcd(sum_num, sum_den);
        if (common > 1) {
            sum_num /= common;
            sum_den /= common;
        }
    }
    if (sum_den != 1)
        throw std::invalid_argument("rank_from_pairs: total is not an integer (incomplete pair set)");

    RankReport report;
    report.rank = (int)sum_num;
    report.verdict = verdict_from_rank(report.rank);
    report.method = RankMethod::Shoda;
    return report;
}

// --- family pair sets --------------------------------------------------------

FamilyShoda shoda_pairs_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("shoda_pairs_cyclic: n must be >= 1");
    FamilyShoda family{FiniteGroup::cyclic(n), {}};
    const FiniteGroup& g = family.group;
    int a = n > 1 ? 1 : 0;
    Subgroup whole = whole_group(g);
    for (int d : nt::divisors(n)) {
        Subgroup k = subgroup_closure(g, {g.power(a, d)});
        family.pairs.push_back(make_shoda_pair(g, whole, std::move(k)));
    }
    return family;
}

FamilyShoda shoda_pairs_dihedral(int n) {
    if (n < 3) throw std::invalid_argument("shoda_pairs_dihedral: n must be >= 3");
    FamilyShoda family{FiniteGroup::dihedral(n), {}};
    const FiniteGroup& g = family.group;
    int a = 1, b = n; // word-form indices
    Subgroup whole = whole_group(g);
    Subgroup rotations = subgroup_closure(g, {a});

    family.pairs.push_back(make_shoda_pair(g, whole, whole));
    if (n % 2 == 0) {
        int a2 = g.power(a, 2);
        family.pairs.push_back(make_shoda_pair(g, whole, subgroup_closure(g, {a2, g.mul(a, b)})));
        family.pairs.push_back(make_shoda_pair(g, whole, subgroup_closure(g, {a2, b})));
    }
    family.pairs.push_back(make_shoda_pair(g, whole, rotations));
    for (int d : nt::divisors(n)) {
        if (d == 1 || (n % 2 == 0 && d == 2)) continue;
        family.pairs.push_back(make_shoda_pair(g, rotations, subgroup_closure(g, {g.power(a, d)})));
    }
    return family;
}

FamilyShoda shoda_pairs_quaternion(int m) {
    if (m < 2) throw std::invalid_argument("shoda_pairs_quaternion: m must be >= 2");
    FamilyShoda family{FiniteGroup::generalized_quaternion(m), {}};
    const FiniteGroup& g = family.group;
    int a = 1, b = 2 * m;
    Subgroup whole = whole_group(g);
    Subgroup rotations = subgroup_closure(g, {a});
    int a2 = g.power(a, 2);

    family.pairs.push_back(make_shoda_pair(g, whole, whole));
    if (m % 2 == 0) {
        family.pairs.push_back(make_shoda_pair(g, whole, subgroup_closure(g, {a2, g.mul(a, b)})));
        family.pairs.push_back(make_shoda_pair(g, whole, subgroup_closure(g, {a2, b})));
        family.pairs.push_back(make_shoda_pair(g, whole, rotations));
    } else {
        family.pairs.push_back(make_shoda_pair(g, whole, rotations));
        family.pairs.push_back(make_shoda_pair(g, whole, subgroup_closure(g, {a2})));
    }
    for (int d : nt::divisors(2 * m)) {
        if (d == 1 || d == 2) continue;
        family.pairs.push_back(make_shoda_pair(g, rotations, subgroup_closure(g, {g.power(a, d)})));
    }
    return family;
}

FamilyShoda shoda_pairs_metacyclic_pq(int p, int n, int q, int m, std::optional<int> r) {
    long long pn = 1, qm = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    for (int i = 0; i < m; ++i) qm *= q;

    FiniteGroup g = [&] {
        if (r) {
            if (std::gcd<long long>(*r, qm) != 1 || nt::mult_order_mod(*r, (int)qm) != pn)
                throw std::invalid_argument(
                    "shoda_pairs_metacyclic_pq: r does not present a faithful action");
            return FiniteGroup::split_metacyclic((int)qm, (int)pn, (int)qm, *r);
        }
        return metacyclic_pq_group(p, n, q, m);
    }();

    FamilyShoda family{std::move(g), {}};
    const FiniteGroup& grp = family.group;
    int a = 1, b = (int)qm;
    Subgroup whole = whole_group(grp);
    Subgroup a_sub = subgroup_closure(grp, {a});

    family.pairs.push_back(make_shoda_pair(grp, whole, whole));
    long long qj = 1;
    for (int j1 = 1; j1 <= m; ++j1) {
        qj *= q;
        family.pairs.push_back(
            make_shoda_pair(grp, a_sub, subgroup_closure(grp, {grp.power(a, qj)})));
    }
    long long pj = 1;
    for (int j2 = 1; j2 <= n; ++j2) {
        pj *= p;
        family.pairs.push_back(
            make_shoda_pair(grp, whole, subgroup_closure(grp, {a, grp.power(b, pj)})));
    }
    return family;
}

ComponentShape component_center_degree(const MetacyclicParams& params) {
    int o = nt::mult_order_mod(params.r, params.n);
    int phi = nt::totient(params.n);
    if (phi % o != 0)
        throw Error(Errc::Internal, "component_center_degree: o does not divide φ(n)");
    return ComponentShape{o, phi / o};
}

ComponentShape component_center_degree(const FiniteGroup& g) {
    if (!g.word_form())
        throw std::invalid_argument("component_center_degree: group has no metacyclic word form");
    return component_center_degree(*g.word_form());
}

} // namespace cutrank
