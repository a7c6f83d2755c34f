#include <doctest.h>

#include <algorithm>
#include <set>

#include "orbisect/catalog.hpp"
#include "orbisect/errors.hpp"
#include "orbisect/group.hpp"

using namespace orbisect;

namespace {

// Independent subgroup finder: test every subset (groups of order <= 8).
std::set<std::vector<int>> subgroups_by_subsets(const FiniteGroup& G) {
    const int n = G.order();
    REQUIRE(n <= 8);
    std::set<std::vector<int>> found;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & (1u << G.identity()))) continue;
        std::vector<int> elems;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) elems.push_back(i);
        bool closed = true;
        for (int a : elems)
            for (int b : elems)
                if (!(mask & (1u << G.mul(a, b)))) {
                    closed = false;
                    break;
                }
        for (int a : elems)
            if (!(mask & (1u << G.inv(a)))) closed = false;
        if (closed) found.insert(elems);
    }
    return found;
}

}  // namespace

TEST_CASE("from_table rejects broken tables with a witness") {
    // non-Latin row
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 0}, {1, 0}}), AxiomViolation);
    try {
        FiniteGroup::from_table({{0, 0}, {1, 0}}, {}, "bad");
        FAIL("expected a throw");
    } catch (const AxiomViolation& e) {
        CHECK(e.path == "bad");
        CHECK(e.axiom.find("permutation") != std::string::npos);
        CHECK(e.witness.find("row 0") != std::string::npos);
    }
    // no identity: Latin square with no unit row/column
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), AxiomViolation);
    // non-associative Latin square with identity (smallest is order 5)
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                             {1, 0, 3, 4, 2},
                                             {2, 4, 0, 1, 3},
                                             {3, 2, 4, 0, 1},
                                             {4, 3, 1, 2, 0}}),
                    AxiomViolation);
}

TEST_CASE("element data on S3") {
    const FiniteGroup g = symmetric_group(3);
    CHECK(g.order() == 6);
    CHECK_FALSE(g.is_abelian());
    std::vector<int> profile = g.order_profile();
    CHECK(profile == std::vector<int>{1, 2, 2, 2, 3, 3});
    for (int a = 0; a < 6; ++a) {
        CHECK(g.mul(a, g.inv(a)) == g.identity());
        CHECK(g.mul(g.identity(), a) == a);
        // conjugation preserves element order
        for (int b = 0; b < 6; ++b) CHECK(g.element_order(g.conj(b, a)) == g.element_order(a));
    }
}

TEST_CASE("all_subgroups agrees with the subset oracle on every group of order <= 8") {
    for (const FiniteGroup& g :
         {cyclic_group(4), cyclic_group(6), cyclic_group(8), symmetric_group(3), dihedral_group(4),
          quaternion_group(), direct_product(cyclic_group(2), cyclic_group(2)),
          direct_product(cyclic_group(2), cyclic_group(4))}) {
        const auto expected = subgroups_by_subsets(g);
        const auto got = all_subgroups(g);
        CHECK(got.size() == expected.size());
        for (const auto& h : got) {
            CHECK(expected.count(h.elems) == 1);
            validate_subgroup(g, h);
        }
        CHECK(std::is_sorted(got.begin(), got.end(), [](const Subgroup& a, const Subgroup& b) {
            return std::pair(a.order(), a.elems) < std::pair(b.order(), b.elems);
        }));
    }
}

TEST_CASE("frozen subgroup counts") {
    CHECK(all_subgroups(cyclic_group(4)).size() == 3);
    CHECK(all_subgroups(symmetric_group(3)).size() == 6);
    CHECK(all_subgroups(direct_product(cyclic_group(2), cyclic_group(2))).size() == 5);
    CHECK(all_subgroups(quaternion_group()).size() == 6);
    CHECK(all_subgroups(dihedral_group(4)).size() == 10);
    CHECK(all_subgroups(symmetric_group(4)).size() == 30);

    CHECK(conjugacy_classes_of_subgroups(symmetric_group(3)).size() == 4);
    CHECK(conjugacy_classes_of_subgroups(dihedral_group(4)).size() == 8);
    CHECK(conjugacy_classes_of_subgroups(quaternion_group()).size() == 6);
    CHECK(conjugacy_classes_of_subgroups(symmetric_group(4)).size() == 11);
}

TEST_CASE("subgroup validation names the failure") {
    const FiniteGroup g = cyclic_group(4);
    CHECK_THROWS_AS(validate_subgroup(g, Subgroup{{1, 3}}), AxiomViolation);   // no identity
    CHECK_THROWS_AS(validate_subgroup(g, Subgroup{{0, 1}}), AxiomViolation);   // not closed
    CHECK(is_subgroup(g, Subgroup{{0, 2}}));
    CHECK_FALSE(is_subgroup(g, Subgroup{{0, 1}}));
}

TEST_CASE("generated subgroups") {
    const FiniteGroup s3 = symmetric_group(3);
    // an order-3 element generates the rotation subgroup
    int r = -1, s = -1;
    for (int i = 0; i < 6; ++i) {
        if (s3.element_order(i) == 3) r = i;
        if (s3.element_order(i) == 2) s = i;
    }
    CHECK(generated_subgroup(s3, {r}).order() == 3);
    CHECK(generated_subgroup(s3, {s}).order() == 2);
    CHECK(generated_subgroup(s3, {r, s}).order() == 6);
    CHECK(generated_subgroup(s3, {}).order() == 1);
}

TEST_CASE("normalizers and Weyl groups in S3") {
    const FiniteGroup s3 = symmetric_group(3);
    int r = -1, s = -1;
    for (int i = 0; i < 6; ++i) {
        if (s3.element_order(i) == 3) r = i;
        if (s3.element_order(i) == 2 && s < 0) s = i;
    }
    const Subgroup rot = generated_subgroup(s3, {r});
    const Subgroup refl = generated_subgroup(s3, {s});
    CHECK(normalizer(s3, rot).order() == 6);    // index-2 subgroups are normal
    CHECK(normalizer(s3, refl).order() == 2);   // reflections are self-normalizing
    CHECK(weyl(s3, rot).order() == 2);
    CHECK(weyl(s3, refl).order() == 1);
    CHECK(weyl(s3, Subgroup{{s3.identity()}}).order() == 6);

    // Weyl representatives multiply correctly modulo the subgroup
    const WeylGroup w = weyl_with_reps(s3, rot);
    for (int i = 0; i < w.group.order(); ++i)
        for (int j = 0; j < w.group.order(); ++j) {
            const int prod = s3.mul(w.rep_in_parent[i], w.rep_in_parent[j]);
            const int rep = w.rep_in_parent[w.group.mul(i, j)];
            // prod and rep lie in the same coset of rot
            const int diff = s3.mul(s3.inv(rep), prod);
            CHECK(std::binary_search(rot.elems.begin(), rot.elems.end(), diff));
        }
}

TEST_CASE("quotients") {
    const FiniteGroup s3 = symmetric_group(3);
    int r = -1;
    for (int i = 0; i < 6; ++i)
        if (s3.element_order(i) == 3) r = i;
    const QuotientGroup q = quotient_group(s3, generated_subgroup(s3, {r}));
    CHECK(q.group.order() == 2);
    for (int g = 0; g < 6; ++g) CHECK(q.to_quotient[g] == q.to_quotient[q.coset_rep[q.to_quotient[g]]]);

    // D4 / center = Klein four-group
    const FiniteGroup d4 = dihedral_group(4);
    std::vector<int> center;
    for (int z = 0; z < 8; ++z) {
        bool central = true;
        for (int g = 0; g < 8; ++g)
            if (d4.mul(z, g) != d4.mul(g, z)) central = false;
        if (central) center.push_back(z);
    }
    CHECK(center.size() == 2);
    const QuotientGroup q2 = quotient_group(d4, Subgroup{center});
    CHECK(q2.group.order() == 4);
    CHECK(q2.group.is_abelian());
    CHECK(q2.group.order_profile() == std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("commutators and abelianizations") {
    CHECK(commutator_subgroup(symmetric_group(3)).order() == 3);
    CHECK(commutator_subgroup(quaternion_group()).order() == 2);
    CHECK(commutator_subgroup(cyclic_group(6)).order() == 1);

    CHECK(abelianization(cyclic_group(6)) == fg_abelian_from_cyclic(0, {6}));
    CHECK(abelianization(symmetric_group(3)) == fg_abelian_from_cyclic(0, {2}));
    CHECK(abelianization(symmetric_group(4)) == fg_abelian_from_cyclic(0, {2}));
    CHECK(abelianization(quaternion_group()) == fg_abelian_from_cyclic(0, {2, 2}));
    CHECK(abelianization(dihedral_group(4)) == fg_abelian_from_cyclic(0, {2, 2}));
    CHECK(abelianization(dihedral_group(5)) == fg_abelian_from_cyclic(0, {2}));
    CHECK(abelian_invariants(direct_product(cyclic_group(2), cyclic_group(4))) ==
          fg_abelian_from_cyclic(0, {2, 4}));
}

TEST_CASE("isomorphism testing") {
    CHECK(are_isomorphic(cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(3))));
    CHECK_FALSE(are_isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))));
    CHECK_FALSE(are_isomorphic(dihedral_group(4), quaternion_group()));
    CHECK(are_isomorphic(symmetric_group(3), dihedral_group(3)));
    CHECK(are_isomorphic(dihedral_group(6), direct_product(cyclic_group(2), symmetric_group(3))));
    CHECK(are_isomorphic(cyclic_group(1), cyclic_group(1)));

    // witnessing map is a real isomorphism
    const FiniteGroup a = symmetric_group(3), b = dihedral_group(3);
    const std::vector<int> f = find_isomorphism(a, b);
    REQUIRE(f.size() == 6);
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) CHECK(f[a.mul(x, y)] == b.mul(f[x], f[y]));

    CHECK(find_isomorphism(cyclic_group(4), quaternion_group()).empty());
    CHECK_THROWS_AS(are_isomorphic(cyclic_group(3), cyclic_group(3), 2), OrderCapExceeded);
}

TEST_CASE("small generating sets generate") {
    for (const FiniteGroup& g : {symmetric_group(4), quaternion_group(), cyclic_group(12),
                                 dihedral_group(6)}) {
        const auto gens = small_generating_set(g);
        CHECK(generated_subgroup(g, gens).order() == g.order());
        CHECK(gens.size() <= 3);
    }
    CHECK(small_generating_set(cyclic_group(1)).empty());
}

TEST_CASE("embedded subgroup groups multiply like the parent") {
    const FiniteGroup s4 = symmetric_group(4);
    const auto subs = all_subgroups(s4);
    const Subgroup& h = subs[subs.size() / 2];
    const EmbeddedGroup e = subgroup_as_group(s4, h);
    CHECK(e.group.order() == h.order());
    for (int a = 0; a < e.group.order(); ++a)
        for (int b = 0; b < e.group.order(); ++b)
            CHECK(e.to_parent[e.group.mul(a, b)] == s4.mul(e.to_parent[a], e.to_parent[b]));
}
