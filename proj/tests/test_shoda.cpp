#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutrank/rank.hpp"
#include "cutrank/shoda.hpp"

using namespace cutrank;

TEST_CASE("extremely strong Shoda pair verification") {
    SUBCASE("F20: (<a>, 1) verifies") {
        auto f20 = FiniteGroup::split_metacyclic(5, 4, 5, 2);
        auto check = verify_esspair(f20, subgroup_closure(f20, {1}), trivial_subgroup());
        CHECK(check.ok);
    }
    SUBCASE("(G, G) verifies in any group") {
        for (auto g : {FiniteGroup::dihedral(4), FiniteGroup::cyclic(9),
                       FiniteGroup::split_metacyclic(7, 3, 7, 2)}) {
            CHECK(verify_esspair(g, whole_group(g), whole_group(g)).ok);
        }
    }
    SUBCASE("D8: H = K = <a> fails maximality") {
        auto d8 = FiniteGroup::dihedral(4);
        auto rotations = subgroup_closure(d8, {1});
        auto check = verify_esspair(d8, rotations, rotations);
        CHECK_FALSE(check.ok);
        CHECK(check.reason == "(ii) H/K not maximal abelian in N_G(K)/K");
    }
    SUBCASE("K not inside H throws") {
        auto d8 = FiniteGroup::dihedral(4);
        auto rotations = subgroup_closure(d8, {1});
        auto reflection = subgroup_closure(d8, {4});
        CHECK_THROWS_AS(verify_esspair(d8, rotations, reflection), std::invalid_argument);
    }
    SUBCASE("non-normal H is rejected with reason (i)") {
        auto d10 = FiniteGroup::dihedral(5);
        auto reflection = subgroup_closure(d10, {5});
        auto check = verify_esspair(d10, reflection, trivial_subgroup());
        CHECK_FALSE(check.ok);
        CHECK(check.reason == "(i) H not normal in G");
    }
}

TEST_CASE("k-invariant") {
    SUBCASE("dihedral pairs have k = 1 (reflection inverts the rotation)") {
        auto d12 = FiniteGroup::dihedral(6);
        auto k = subgroup_closure(d12, {d12.power(1, 3)}); // <a^3>
        CHECK(k_invariant(d12, k, 1) == 1);
    }
    SUBCASE("(G, G) has k = 1 since h lies in K") {
        auto c9 = FiniteGroup::cyclic(9);
        CHECK(k_invariant(c9, whole_group(c9), 0) == 1);
    }
    SUBCASE("cyclic pairs with divisor > 2 have k = 2") {
        auto c12 = FiniteGroup::cyclic(12);
        CHECK(k_invariant(c12, subgroup_closure(c12, {c12.power(1, 3)}), 1) == 2);
        CHECK(k_invariant(c12, subgroup_closure(c12, {c12.power(1, 4)}), 1) == 2);
        CHECK(k_invariant(c12, subgroup_closure(c12, {c12.power(1, 2)}), 1) == 1);
    }
    SUBCASE("odd order forces k = 2 whenever H != K") {
        for (auto g : {FiniteGroup::cyclic(9), FiniteGroup::cyclic(15),
                       FiniteGroup::split_metacyclic(7, 3, 7, 2),
                       FiniteGroup::split_metacyclic(13, 3, 13, 3)}) {
            // sample pairs (<a>, <a^d>) for divisors of the a-order
            auto a_sub = subgroup_closure(g, {1});
            for (int d = 2; d <= a_sub.order(); ++d) {
                if (a_sub.order() % d != 0) continue;
                auto pair = make_shoda_pair(g, a_sub, subgroup_closure(g, {g.power(1, d)}));
                CHECK(pair.k_invariant == 2);
            }
        }
    }
}

TEST_CASE("family pair sets and their ranks") {
    SUBCASE("cyclic(12): six pairs, one per divisor, rank 1") {
        auto fam = shoda_pairs_cyclic(12);
        CHECK(fam.pairs.size() == 6);
        auto report = rank_from_pairs(fam.group, fam.pairs);
        CHECK(report.rank == 1);
        CHECK(report.method == RankMethod::Shoda);
        // only the divisor-12 pair contributes
        int nonzero = 0;
        for (const auto& pair : fam.pairs)
            if (pair.contrib_num != 0) ++nonzero;
        CHECK(nonzero == 1);
    }
    SUBCASE("dihedral(6): six pairs (four quotient-type + divisors 3, 6)") {
        auto fam = shoda_pairs_dihedral(6);
        CHECK(fam.pairs.size() == 6);
        CHECK(rank_from_pairs(fam.group, fam.pairs).rank == 0);
    }
    SUBCASE("dihedral(5): rank 1 from phi(5)/(1*2) - 1") {
        auto fam = shoda_pairs_dihedral(5);
        CHECK(fam.pairs.size() == 3);
        CHECK(rank_from_pairs(fam.group, fam.pairs).rank == 1);
        const auto& last = fam.pairs.back();
        CHECK(last.index_hk == 5);
        CHECK(last.k_invariant == 1);
        CHECK(last.index_nh == 2);
        CHECK(last.contrib_num == 1);
        CHECK(last.contrib_den == 1);
    }
    SUBCASE("Q8: rank 0") {
        auto fam = shoda_pairs_quaternion(2);
        CHECK(fam.pairs.size() == 5);
        CHECK(rank_from_pairs(fam.group, fam.pairs).rank == 0);
    }
    SUBCASE("Q16 and Q24 have rank 1, Q20 has rank 2") {
        CHECK(rank_from_pairs(shoda_pairs_quaternion(4).group,
                              shoda_pairs_quaternion(4).pairs).rank == 1);
        CHECK(rank_from_pairs(shoda_pairs_quaternion(6).group,
                              shoda_pairs_quaternion(6).pairs).rank == 1);
        CHECK(rank_from_pairs(shoda_pairs_quaternion(5).group,
                              shoda_pairs_quaternion(5).pairs).rank == 2);
    }
    SUBCASE("F20: 1 + 1 + 2 pairs, rank 0") {
        auto fam = shoda_pairs_metacyclic_pq(2, 2, 5, 1);
        CHECK(fam.pairs.size() == 4);
        CHECK(rank_from_pairs(fam.group, fam.pairs).rank == 0);
    }
    SUBCASE("quotient-type pairs (H = G) contribute 0, termwise") {
        for (auto fam : {shoda_pairs_dihedral(6), shoda_pairs_dihedral(9),
                         shoda_pairs_quaternion(4), shoda_pairs_quaternion(5)}) {
            for (const auto& pair : fam.pairs) {
                if (pair.h.order() == fam.group.order()) CHECK(pair.contrib_num == 0);
            }
        }
    }
    SUBCASE("every generated family pair passes verification") {
        // make_shoda_pair already verifies; spot-check reconstruction
        auto fam = shoda_pairs_metacyclic_pq(3, 1, 7, 1);
        for (const auto& pair : fam.pairs) CHECK(verify_esspair(fam.group, pair.h, pair.k).ok);
    }
}

TEST_CASE("rank_from_pairs agrees with the oracle on the families") {
    for (int n = 1; n <= 20; ++n) {
        auto fam = shoda_pairs_cyclic(n);
        CHECK(rank_from_pairs(fam.group, fam.pairs).rank == rank_ferraz(fam.group).rank);
    }
    for (int n = 3; n <= 12; ++n) {
        auto fam = shoda_pairs_dihedral(n);
        CHECK(rank_from_pairs(fam.group, fam.pairs).rank == rank_ferraz(fam.group).rank);
    }
    for (int m = 2; m <= 8; ++m) {
        auto fam = shoda_pairs_quaternion(m);
        CHECK(rank_from_pairs(fam.group, fam.pairs).rank == rank_ferraz(fam.group).rank);
    }
}

TEST_CASE("rank_from_pairs rejects invalid inputs") {
    auto c12 = FiniteGroup::cyclic(12);
    SUBCASE("negative term") {
        ShodaPair doctored;
        doctored.contrib_num = -1;
        doctored.contrib_den = 2;
        CHECK_THROWS_AS(rank_from_pairs(c12, {doctored}), std::invalid_argument);
    }
    SUBCASE("non-integer sum") {
        ShodaPair doctored;
        doctored.contrib_num = 1;
        doctored.contrib_den = 2;
        CHECK_THROWS_AS(rank_from_pairs(c12, {doctored}), std::invalid_argument);
    }
}

TEST_CASE("simple component shape of the canonical metacyclic pair") {
    SUBCASE("F20: o = 4, degree 1") {
        auto shape = component_center_degree(MetacyclicParams{5, 4, 5, 2});
        CHECK(shape.matrix_size == 4);
        CHECK(shape.field_degree == 1);
    }
    SUBCASE("dihedral-presented M(8,2,8,7): o = 2, degree 2") {
        auto shape = component_center_degree(MetacyclicParams{8, 2, 8, 7});
        CHECK(shape.matrix_size == 2);
        CHECK(shape.field_degree == 2);
    }
    SUBCASE("M(7,3,7,2): o = 3, degree 2") {
        auto shape = component_center_degree(FiniteGroup::split_metacyclic(7, 3, 7, 2));
        CHECK(shape.matrix_size == 3);
        CHECK(shape.field_degree == 2);
    }
    SUBCASE("the pair itself verifies when the twist is not absorbed") {
        // (<a, b^o>, <b^o>) with o = ord_n(r); for F20 this is (<a>, 1)
        auto f20 = FiniteGroup::split_metacyclic(5, 4, 5, 2);
        auto pair = make_shoda_pair(f20, subgroup_closure(f20, {1}), trivial_subgroup());
        CHECK(pair.index_hk == 5);
        CHECK(pair.index_nh == 4);
    }
    SUBCASE("groups without word form are rejected") {
        CHECK_THROWS_AS(component_center_degree(FiniteGroup::direct_product(
                            FiniteGroup::cyclic(2), FiniteGroup::cyclic(3))),
                        std::invalid_argument);
    }
}
