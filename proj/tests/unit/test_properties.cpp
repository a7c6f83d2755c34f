#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "orbisect/catalog.hpp"
#include "orbisect/homology.hpp"
#include "orbisect/invariants.hpp"
#include "orbisect/sectors.hpp"

#include "../support/gen.hpp"

using namespace orbisect;
using testgen::Rng;

TEST_CASE("class equation for subgroup counting") {
    // #subgroups = sum over classes of [G : N_G(rep)]
    for (const FiniteGroup& g : testgen::group_zoo()) {
        if (g.order() > 16) continue;
        const auto classes = conjugacy_classes_of_subgroups(g);
        std::size_t total = 0;
        for (const auto& cls : classes) {
            const Subgroup n = normalizer(g, cls[0]);
            CHECK(g.order() % (int)n.elems.size() == 0);
            const std::size_t index = g.order() / n.elems.size();
            CHECK(cls.size() == index);
            total += index;
        }
        CHECK(total == all_subgroups(g).size());
    }
}

TEST_CASE("isomorphism testing is reflexive and symmetric") {
    Rng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        const FiniteGroup a = testgen::random_group_capped(rng, 16);
        const FiniteGroup b = testgen::random_group_capped(rng, 16);
        CHECK(are_isomorphic(a, a));
        CHECK(are_isomorphic(b, b));
        CHECK(are_isomorphic(a, b) == are_isomorphic(b, a));
    }
}

TEST_CASE("skeleton is idempotent and equivalent") {
    Rng rng(202);
    for (int trial = 0; trial < 8; ++trial) {
        const FiniteGroup g = testgen::random_group_capped(rng, 12);
        const GroupAction x = testgen::random_gset(g, rng, 10);
        const FiniteGroupoid t = translation_groupoid(g, x);
        const SkeletonResult sk = skeleton(t);
        CHECK(is_weak_equivalence(sk.gpd, t, sk.inclusion));
        const SkeletonResult sk2 = skeleton(sk.gpd);
        CHECK(sk2.gpd.n_objects == sk.gpd.n_objects);
        CHECK(sk2.gpd.n_arrows == sk.gpd.n_arrows);
        // skeleton object count = orbit count
        CHECK(sk.gpd.n_objects == (int)orbits(g, x).size());
    }
}

TEST_CASE("morita equivalence with itself and with inflations") {
    Rng rng(303);
    for (int trial = 0; trial < 6; ++trial) {
        const FiniteGroup g = testgen::random_group_capped(rng, 10);
        const GroupAction x = testgen::random_gset(g, rng, 8);
        const FiniteGroupoid t = translation_groupoid(g, x);
        CHECK(morita_equivalent(t, t).equivalent);

        const testgen::Inflation inf = testgen::inflate_components(t, rng, 2);
        CHECK(is_weak_equivalence(t, inf.gpd, inf.inclusion));
        const MoritaResult m = morita_equivalent(t, inf.gpd);
        CHECK(m.equivalent);
        // certificate group isomorphisms multiply correctly
        for (const auto& match : m.matches) {
            const FiniteGroup a = isotropy(t, match.object_a).group;
            const FiniteGroup b = isotropy(inf.gpd, match.object_b).group;
            REQUIRE((int)match.group_iso.size() == a.order());
            for (int p = 0; p < a.order(); ++p)
                for (int q = 0; q < a.order(); ++q)
                    CHECK(match.group_iso[a.mul(p, q)] ==
                          b.mul(match.group_iso[p], match.group_iso[q]));
        }
    }
}

TEST_CASE("sector points enumerate subgroups of stabilizers") {
    Rng rng(404);
    for (int trial = 0; trial < 8; ++trial) {
        const FiniteGroup g = testgen::random_group_capped(rng, 12);
        const GroupAction x = testgen::random_gset(g, rng, 8);
        const FiniteGroupoid t = translation_groupoid(g, x);
        const SectorSpace s = sector_space(t);
        // per object: number of sector points there = #subgroups of the stabilizer
        std::map<int, int> per_base;
        for (const SectorPoint& p : s.points) ++per_base[p.base];
        for (int pt = 0; pt < x.degree; ++pt) {
            const Subgroup st = stabilizer(g, x, pt);
            const auto subs = all_subgroups(subgroup_as_group(g, st).group);
            CHECK(per_base[pt] == (int)subs.size());
        }
    }
}

TEST_CASE("tuple counting: |H|! orderings per stratum point") {
    Rng rng(505);
    for (int trial = 0; trial < 5; ++trial) {
        const FiniteGroup g = testgen::random_group_capped(rng, 8);
        const GroupAction x = testgen::random_gset(g, rng, 6);
        const FiniteGroupoid t = translation_groupoid(g, x);
        const SectorSpace s = sector_space(t);
        // group strata by abstract type; p_h_count must equal |H|! * #points
        for (const SectorStratum& st : s.strata) {
            bigint expect = factorial(st.rep.order());
            bigint points = 0;
            // p_h counts every subgroup isomorphic to rep, across all strata of that type
            for (const SectorStratum& other : s.strata)
                if (other.rep.order() == st.rep.order() &&
                    are_isomorphic(other.rep, st.rep))
                    points += (int)other.points.size();
            CHECK(p_h_count(t, st.rep) == expect * points);
        }
    }
}

TEST_CASE("reduced sector groupoid passes the full axiom suite") {
    Rng rng(606);
    for (int trial = 0; trial < 5; ++trial) {
        const FiniteGroup g = testgen::random_group_capped(rng, 8);
        const GroupAction x = testgen::random_gset(g, rng, 6);
        const SectorContext ctx = build_sectors(translation_groupoid(g, x));
        CHECK_NOTHROW(validate_groupoid(ctx.tilde.ag.gpd, "sector groupoid", Check::Full));
        CHECK_NOTHROW(validate_groupoid(ctx.reduced.gpd, "reduced", Check::Full));
        // embedding of the base into the trivial stratum is faithful
        CHECK(is_faithful(ctx.base, ctx.tilde.ag.gpd, ctx.tilde.embedding));
        // reduced isotropy divides unreduced isotropy at every point
        for (int p = 0; p < ctx.tilde.ag.gpd.n_objects; ++p) {
            const int nt = isotropy(ctx.tilde.ag.gpd, p).group.order();
            const int nr = isotropy(ctx.reduced.gpd, p).group.order();
            CHECK(nt % nr == 0);
            CHECK(nt / nr == (int)ctx.tilde.space.points[p].arrows.size());
        }
    }
}

TEST_CASE("boundary squared vanishes on random translation groupoids") {
    Rng rng(707);
    for (int trial = 0; trial < 5; ++trial) {
        const FiniteGroup g = testgen::random_group_capped(rng, 8);
        const GroupAction x = testgen::random_gset(g, rng, 6);
        const FiniteGroupoid t = translation_groupoid(g, x);
        const TruncatedNerve n = nerve(t, 3);
        const auto chains = chain_complex(t, n);
        for (std::size_t k = 0; k + 1 < chains.size(); ++k) {
            const IntegerMatrix& A = chains[k];
            const IntegerMatrix& B = chains[k + 1];
            for (int c = 0; c < B.cols; ++c) {
                std::map<int, bigint> col;
                for (const auto& [rc, v] : B.entries)
                    if (rc.second == c) col[rc.first] += v;
                std::map<int, bigint> out;
                for (const auto& [mid, v] : col)
                    for (const auto& [rcA, vA] : A.entries)
                        if (rcA.second == mid) out[rcA.first] += vA * v;
                for (const auto& [row, v] : out) CHECK(v == 0);
            }
        }
    }
}

TEST_CASE("degeneracy-closure count identity") {
    Rng rng(808);
    for (int trial = 0; trial < 5; ++trial) {
        const FiniteGroup g = testgen::random_group_capped(rng, 10);
        const FiniteGroupoid b = from_group(g);
        const TruncatedNerve n = nerve(b, 3);
        for (int k = 0; k <= 3; ++k) {
            bigint expect = 1;
            for (int i = 0; i < k; ++i) expect *= g.order();
            CHECK(simplex_count_with_degeneracies(n, k) == expect);
        }
    }
}

TEST_CASE("stable degree 0 equals the local class count") {
    Rng rng(909);
    for (int trial = 0; trial < 5; ++trial) {
        const FiniteGroup g = testgen::random_group_capped(rng, 10);
        const GroupAction x = testgen::random_gset(g, rng, 8);
        const SectorContext ctx = build_sectors(translation_groupoid(g, x));
        const StableResult s0 = stable_pi_orb(ctx, 0);
        CHECK(s0.group.free_rank == (int)local_components(ctx.tilde).size());
        CHECK(s0.group.torsion.empty());
    }
}

TEST_CASE("trivial-stratum embedding is a section over every object") {
    Rng rng(111);
    for (int trial = 0; trial < 5; ++trial) {
        const FiniteGroup g = testgen::random_group_capped(rng, 10);
        const GroupAction x = testgen::random_gset(g, rng, 8);
        const SectorContext ctx = build_sectors(translation_groupoid(g, x));
        const GroupoidHom round =
            compose_homs(ctx.tilde.ag.projection, ctx.tilde.embedding);
        const GroupoidHom id = identity_hom(ctx.base);
        CHECK(round.obj_map == id.obj_map);
        CHECK(round.arrow_map == id.arrow_map);
        for (int obj = 0; obj < ctx.base.n_objects; ++obj) {
            const int p = ctx.tilde.embedding.obj_map[obj];
            CHECK(ctx.tilde.space.points[p].arrows ==
                  std::vector<int>{ctx.base.unit[obj]});
        }
    }
}
