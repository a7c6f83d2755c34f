#include <doctest.h>

#include <algorithm>

#include "orbisect/catalog.hpp"
#include "orbisect/errors.hpp"
#include "orbisect/groupoid.hpp"

using namespace orbisect;

namespace {
int reflection_of_s3(const FiniteGroup& s3) {
    for (int i = 0; i < s3.order(); ++i)
        if (s3.element_order(i) == 2) return i;
    return -1;
}
}  // namespace

TEST_CASE("standard constructions validate fully") {
    CHECK_NOTHROW(validate_groupoid(from_group(symmetric_group(3)), "BS3", Check::Full));
    CHECK_NOTHROW(validate_groupoid(unit_groupoid(4), "discrete", Check::Full));
    const FiniteGroup c4 = cyclic_group(4);
    CHECK_NOTHROW(
        validate_groupoid(translation_groupoid(c4, regular_action(c4)), "C4 x C4", Check::Full));
    const FiniteGroup s3 = symmetric_group(3);
    const Subgroup h = generated_subgroup(s3, {reflection_of_s3(s3)});
    CHECK_NOTHROW(
        validate_groupoid(translation_groupoid(s3, coset_action(s3, h)), "S3 x S3/H", Check::Full));
}

TEST_CASE("validate_groupoid catches tampering") {
    const FiniteGroup c2 = cyclic_group(2);

    // wrong unit: point the unit of object 0 at the non-identity loop
    {
        FiniteGroupoid g = from_group(c2);
        g.unit[0] = 1;
        try {
            validate_groupoid(g, "bad", Check::Full);
            FAIL("expected throw");
        } catch (const AxiomViolation& e) {
            CHECK(std::string(e.axiom).find("unit") != std::string::npos);
        }
    }

    // wrong inverse on a translation groupoid arrow
    {
        const FiniteGroup c4 = cyclic_group(4);
        FiniteGroupoid g = translation_groupoid(c4, regular_action(c4));
        const int a = trans_arrow(1, 0, 4);  // r: 0 -> 1
        g.inv[a] = a;                        // r is not its own inverse
        CHECK_THROWS_AS(validate_groupoid(g, "bad", Check::Full), AxiomViolation);
    }

    // missing composition entry
    {
        FiniteGroupoid g = from_group(c2);
        g.comp.erase(FiniteGroupoid::key(1, 1));
        try {
            validate_groupoid(g, "bad", Check::Full);
            FAIL("expected throw");
        } catch (const AxiomViolation& e) {
            CHECK(std::string(e.axiom).find("compos") != std::string::npos);
        }
    }

    // broken associativity: reroute a composite in B(C2 x C2)
    {
        const FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
        FiniteGroupoid g = from_group(v4);
        g.set_compose(1, 2, 0);  // truth: arrow mul(1,2) = 3
        CHECK_THROWS_AS(validate_groupoid(g, "bad", Check::Full), AxiomViolation);
        // Basic does not look at composite coherence beyond endpoints
        CHECK_NOTHROW(validate_groupoid(g, "bad", Check::Basic));
    }

    // source out of range
    {
        FiniteGroupoid g = unit_groupoid(2);
        g.src[1] = 7;
        CHECK_THROWS_AS(validate_groupoid(g, "bad", Check::Basic), AxiomViolation);
    }
}

TEST_CASE("isotropy recovers the group of a one-object groupoid") {
    const FiniteGroup s3 = symmetric_group(3);
    const FiniteGroupoid b = from_group(s3);
    const IsotropyGroup iso = isotropy(b, 0);
    CHECK(iso.group.order() == 6);
    CHECK(are_isomorphic(iso.group, s3));
    // arrow_of_elem and elem_of_arrow invert each other
    for (int e = 0; e < 6; ++e) CHECK(iso.elem_of_arrow[iso.arrow_of_elem[e]] == e);
    // multiplication matches composition: arrow(a*b) = arrow(a) o arrow(b)
    for (int a = 0; a < 6; ++a)
        for (int c = 0; c < 6; ++c)
            CHECK(iso.arrow_of_elem[iso.group.mul(a, c)] ==
                  b.compose(iso.arrow_of_elem[a], iso.arrow_of_elem[c]));
}

TEST_CASE("translation groupoid isotropy is the stabilizer") {
    const FiniteGroup s3 = symmetric_group(3);
    const Subgroup h = generated_subgroup(s3, {reflection_of_s3(s3)});
    const GroupAction a = coset_action(s3, h);
    const FiniteGroupoid t = translation_groupoid(s3, a);
    for (int x = 0; x < a.degree; ++x) {
        const IsotropyGroup iso = isotropy(t, x);
        const Subgroup st = stabilizer(s3, a, x);
        CHECK(iso.group.order() == (int)st.elems.size());
    }
}

TEST_CASE("components") {
    const FiniteGroup c2 = cyclic_group(2);
    const FiniteGroupoid t = translation_groupoid(
        c2, disjoint_union_action(c2, {regular_action(c2), trivial_action(c2, 2)}));
    const auto comps = components(t);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2});
    CHECK(comps[2] == std::vector<int>{3});

    CHECK(components(unit_groupoid(5)).size() == 5);
    CHECK(components(from_group(symmetric_group(4))).size() == 1);
}

TEST_CASE("skeleton and weak equivalence") {
    const FiniteGroup c2 = cyclic_group(2);
    const FiniteGroupoid t = translation_groupoid(
        c2, disjoint_union_action(c2, {regular_action(c2), trivial_action(c2, 1)}));
    const SkeletonResult sk = skeleton(t);
    CHECK(sk.gpd.n_objects == 2);
    CHECK(sk.object_in_parent == std::vector<int>{0, 2});
    CHECK_NOTHROW(validate_groupoid(sk.gpd, "skeleton", Check::Full));
    CHECK_NOTHROW(validate_hom(sk.gpd, t, sk.inclusion));
    CHECK(is_weak_equivalence(sk.gpd, t, sk.inclusion));
    // free part collapses to a point, fixed part keeps its C2 loop
    CHECK(isotropy(sk.gpd, 0).group.order() == 1);
    CHECK(isotropy(sk.gpd, 1).group.order() == 2);

    // a non-surjective-on-components hom is not a weak equivalence
    const Subgroupoid part = full_subgroupoid(t, {0, 1});
    GroupoidHom incl;
    incl.obj_map = part.object_in_parent;
    incl.arrow_map = part.arrow_in_parent;
    CHECK_NOTHROW(validate_hom(part.gpd, t, incl));
    CHECK_FALSE(is_weak_equivalence(part.gpd, t, incl));
}

TEST_CASE("morita equivalence") {
    const FiniteGroup c2 = cyclic_group(2);

    // free transitive action is equivalent to the point
    const FiniteGroupoid t = translation_groupoid(c2, regular_action(c2));
    const MoritaResult r = morita_equivalent(t, unit_groupoid(1));
    CHECK(r.equivalent);
    REQUIRE(r.matches.size() == 1);
    CHECK(r.matches[0].group_iso == std::vector<int>{0});

    // equivalence is reflexive, with honest isotropy isomorphisms
    const FiniteGroup s3 = symmetric_group(3);
    const FiniteGroupoid b = from_group(s3);
    const MoritaResult rr = morita_equivalent(b, b);
    CHECK(rr.equivalent);
    REQUIRE(rr.matches.size() == 1);
    const std::vector<int>& f = rr.matches[0].group_iso;
    for (int a = 0; a < 6; ++a)
        for (int c = 0; c < 6; ++c) CHECK(f[s3.mul(a, c)] == s3.mul(f[a], f[c]));

    // same object/arrow counts, different isotropy: not equivalent
    const MoritaResult bad1 =
        morita_equivalent(from_group(cyclic_group(4)),
                          from_group(direct_product(cyclic_group(2), cyclic_group(2))));
    CHECK_FALSE(bad1.equivalent);
    CHECK_FALSE(bad1.reason.empty());

    // different component counts: not equivalent
    const MoritaResult bad2 = morita_equivalent(unit_groupoid(2), unit_groupoid(3));
    CHECK_FALSE(bad2.equivalent);

    // B(S3) vs S3 acting on cosets of a reflection subgroup: inequivalent
    const Subgroup h = generated_subgroup(s3, {reflection_of_s3(s3)});
    const MoritaResult bad3 = morita_equivalent(b, translation_groupoid(s3, coset_action(s3, h)));
    CHECK_FALSE(bad3.equivalent);
}

TEST_CASE("quotient by wide normal subgroupoid") {
    const FiniteGroup s3 = symmetric_group(3);
    const FiniteGroupoid b = from_group(s3);

    // quotient by units is the identity
    {
        const QuotientResult q = quotient_by_normal_wide_subgroupoid(b, {b.unit[0]});
        CHECK(q.gpd.n_objects == 1);
        CHECK(q.gpd.n_arrows == 6);
        CHECK_NOTHROW(validate_groupoid(q.gpd, "q", Check::Full));
        for (int a = 0; a < 6; ++a) CHECK(q.class_rep[q.arrow_class[a]] == a);
    }

    // quotient by everything collapses to the point
    {
        std::vector<int> all(6);
        for (int a = 0; a < 6; ++a) all[a] = a;
        const QuotientResult q = quotient_by_normal_wide_subgroupoid(b, all);
        CHECK(q.gpd.n_objects == 1);
        CHECK(q.gpd.n_arrows == 1);
        CHECK_NOTHROW(validate_groupoid(q.gpd, "q", Check::Full));
    }

    // quotient by the rotation subgroup gives C2
    {
        std::vector<int> a3 = {s3.identity()};
        for (int a = 0; a < 6; ++a)
            if (s3.element_order(a) == 3) a3.push_back(a);
        REQUIRE(a3.size() == 3);
        const QuotientResult q = quotient_by_normal_wide_subgroupoid(b, a3);
        CHECK(q.gpd.n_arrows == 2);
        const IsotropyGroup iso = isotropy(q.gpd, 0);
        CHECK(are_isomorphic(iso.group, cyclic_group(2)));
    }

    // non-normal kernel (a reflection subgroup) is rejected
    {
        const int s = reflection_of_s3(s3);
        try {
            quotient_by_normal_wide_subgroupoid(b, {s3.identity(), s});
            FAIL("expected throw");
        } catch (const AxiomViolation& e) {
            CHECK(std::string(e.axiom).find("normal") != std::string::npos);
        }
    }

    // kernel must be wide: missing a unit
    {
        const FiniteGroupoid u2 = unit_groupoid(2);
        CHECK_THROWS_AS(quotient_by_normal_wide_subgroupoid(u2, {u2.unit[0]}), AxiomViolation);
    }

    // kernel must be totally intransitive: no cross-object arrows
    {
        const FiniteGroup c2 = cyclic_group(2);
        const FiniteGroupoid t = translation_groupoid(c2, regular_action(c2));
        std::vector<int> k = {t.unit[0], t.unit[1], trans_arrow(1, 0, 2)};
        CHECK_THROWS_AS(quotient_by_normal_wide_subgroupoid(t, k), AxiomViolation);
    }

    // kernel must be closed under inverse/composition
    {
        const FiniteGroup c4 = cyclic_group(4);
        const FiniteGroupoid b4 = from_group(c4);
        // {e, r} is not closed
        CHECK_THROWS_AS(quotient_by_normal_wide_subgroupoid(b4, {0, 1}), AxiomViolation);
    }
}

TEST_CASE("disjoint union") {
    const FiniteGroupoid a = from_group(cyclic_group(2));
    const FiniteGroupoid b = unit_groupoid(2);
    const DisjointUnion u = disjoint_union({a, b});
    CHECK(u.gpd.n_objects == 3);
    CHECK(u.gpd.n_arrows == 4);
    CHECK(u.object_offset == std::vector<int>{0, 1});
    CHECK(u.arrow_offset == std::vector<int>{0, 2});
    CHECK_NOTHROW(validate_groupoid(u.gpd, "union", Check::Full));
    CHECK(components(u.gpd).size() == 3);
    CHECK(isotropy(u.gpd, 0).group.order() == 2);
    CHECK(isotropy(u.gpd, 1).group.order() == 1);
}

TEST_CASE("hom validation and faithfulness") {
    const FiniteGroup c2 = cyclic_group(2);
    const FiniteGroupoid b2 = from_group(c2);
    const FiniteGroupoid pt = unit_groupoid(1);

    // collapse B(C2) -> point: a valid hom, but not faithful
    GroupoidHom collapse;
    collapse.obj_map = {0};
    collapse.arrow_map = {0, 0};
    CHECK_NOTHROW(validate_hom(b2, pt, collapse));
    CHECK_FALSE(is_faithful(b2, pt, collapse));
    CHECK_FALSE(is_weak_equivalence(b2, pt, collapse));

    // identity hom is faithful
    CHECK(is_faithful(b2, b2, identity_hom(b2)));
    CHECK(is_weak_equivalence(b2, b2, identity_hom(b2)));

    // a non-functorial map is rejected: send the C2 loop to a unit
    const FiniteGroup c4 = cyclic_group(4);
    const FiniteGroupoid b4 = from_group(c4);
    GroupoidHom wrong;
    wrong.obj_map = {0};
    wrong.arrow_map = {0, 1};  // r of order 2 mapped to r of order 4
    CHECK_THROWS_AS(validate_hom(b2, b4, wrong), AxiomViolation);

    // composing homs composes maps
    const SkeletonResult sk = skeleton(b2);
    const GroupoidHom round = compose_homs(sk.inclusion, identity_hom(sk.gpd));
    CHECK(round.obj_map == sk.inclusion.obj_map);
    CHECK(round.arrow_map == sk.inclusion.arrow_map);
}
