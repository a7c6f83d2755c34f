// Acceptance gate: eight end-to-end checks, one PASS/FAIL line each,
// nonzero exit on any failure. Instance counts and time limits are pinned
// as constants next to each check; all comparisons are exact.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbisect/catalog.hpp"
#include "orbisect/group.hpp"
#include "orbisect/group_action.hpp"
#include "orbisect/groupoid.hpp"
#include "orbisect/groupoid_action.hpp"
#include "orbisect/homology.hpp"
#include "orbisect/invariants.hpp"
#include "orbisect/sectors.hpp"
#include "support/gen.hpp"

using namespace orbisect;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(long long v) { return std::to_string(v); }

// 1. On random translation groupoids G⋉X the sector space must equal, as a
// set with its conjugation action, the disjoint union over all H ≤ G of the
// H-fixed points, rebuilt here from the action table alone.
constexpr int kSectorTrials = 50;
constexpr double kSectorLimit = 30.0;

std::string sector_identity() {
    const auto t0 = Clock::now();
    testgen::Rng rng(9001);
    for (int trial = 0; trial < kSectorTrials; ++trial) {
        const FiniteGroup G = testgen::random_group(rng);
        const GroupAction X = testgen::random_gset(G, rng, 12);
        const FiniteGroupoid T = translation_groupoid(G, X);
        const SectorSpace S = sector_space(T);

        const std::vector<Subgroup> subs = all_subgroups(G);
        std::vector<std::pair<int, int>> pts;  // (subgroup index, fixed point)
        std::map<std::pair<std::vector<int>, int>, int> at;
        for (int si = 0; si < static_cast<int>(subs.size()); ++si)
            for (int x : fixed_points(X, subs[si])) {
                at[{subs[si].elems, x}] = static_cast<int>(pts.size());
                pts.emplace_back(si, x);
            }
        if (pts.size() != S.points.size())
            return "trial " + num(trial) + ": " + num(pts.size()) + " fixed pairs vs " +
                   num(S.points.size()) + " sector points";

        std::vector<int> to_sector(pts.size());
        std::vector<char> hit(S.points.size(), 0);
        for (std::size_t e = 0; e < pts.size(); ++e) {
            const auto [si, x] = pts[e];
            std::vector<int> arrows;
            arrows.reserve(subs[si].elems.size());
            for (int h : subs[si].elems) arrows.push_back(trans_arrow(h, x, X.degree));
            const int p = S.point_index(x, arrows);
            if (p < 0)
                return "trial " + num(trial) + ": fixed pair missing from sectors at point " +
                       num(x);
            if (hit[p]) return "trial " + num(trial) + ": two fixed pairs hit one sector point";
            hit[p] = 1;
            to_sector[e] = p;
        }

        // g.(H, x) = (gHg⁻¹, g.x), packaged as an action of T over the bases
        GroupoidAction E;
        E.carrier = static_cast<int>(pts.size());
        E.anchor.resize(pts.size());
        E.point_labels.assign(pts.size(), "");
        for (std::size_t e = 0; e < pts.size(); ++e) {
            const auto [si, x] = pts[e];
            E.anchor[e] = x;
            for (int g = 0; g < G.order(); ++g) {
                const Subgroup cH = conjugate_subgroup(G, g, subs[si]);
                E.set_act(trans_arrow(g, x, X.degree), static_cast<int>(e),
                          at.at({cH.elems, X.act(g, x)}));
            }
        }
        validate_groupoid_action(T, E, "independent sectors");
        if (!is_equivariant_bijection(T, E, S.action, to_sector))
            return "trial " + num(trial) + ": bijection is not equivariant";
    }
    if (elapsed(t0) >= kSectorLimit) return "runtime over " + num((long long)kSectorLimit) + "s";
    return "";
}

// 2. Every stratum packs |H|! ordered tuples per sector point:
// |P^H| = |H|! * |S^H|, counted without materializing.
std::string factorial_strata() {
    testgen::Rng rng(9002);
    std::vector<FiniteGroupoid> instances;
    for (int trial = 0; trial < 25; ++trial) {
        const FiniteGroup G = testgen::random_group(rng);
        instances.push_back(translation_groupoid(G, testgen::random_gset(G, rng, 10)));
    }
    instances.push_back(from_group(symmetric_group(4)));
    instances.push_back(from_group(dihedral_group(4)));
    instances.push_back(from_group(quaternion_group()));
    instances.push_back(from_group(cyclic_group(12)));
    instances.push_back(from_group(direct_product(cyclic_group(2), cyclic_group(6))));
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const SectorSpace S = sector_space(instances[i]);
        std::size_t covered = 0;
        for (const SectorStratum& st : S.strata) {
            covered += st.points.size();
            const bigint want = factorial(st.rep.order()) * static_cast<int>(st.points.size());
            const bigint got = p_h_count(instances[i], st.rep);
            if (got != want)
                return "instance " + num(i) + " stratum " + st.label + ": tuple count " +
                       got.str() + ", |H|! * points = " + want.str();
        }
        if (covered != S.points.size())
            return "instance " + num(i) + ": strata cover " + num(covered) + " of " +
                   num(S.points.size()) + " points";
    }
    return "";
}

// 3. Component inflation (objects blown up into clusters, hom-sets
// transported) must leave every sector-level invariant alone: the induced
// homs are weak equivalences, the comparison square commutes, and stable
// degrees 0-1 plus the homotopy at matched sector points agree.
constexpr int kInflationPairs = 50;
constexpr double kInflationLimit = 60.0;

std::string inflation_invariance() {
    const auto t0 = Clock::now();
    testgen::Rng rng(9003);
    for (int trial = 0; trial < kInflationPairs; ++trial) {
        const FiniteGroup G = testgen::random_group_capped(rng, 8);
        const GroupAction X = testgen::random_gset(G, rng, 6);
        const FiniteGroupoid T = translation_groupoid(G, X);
        const testgen::Inflation infl = testgen::inflate_components(T, rng, 3);

        const SectorContext A = build_sectors(T);
        const SectorContext B = build_sectors(infl.gpd);
        const SectorHomResult hom = induced_sector_hom(A, B, infl.inclusion);
        if (!is_weak_equivalence(A.tilde.ag.gpd, B.tilde.ag.gpd, hom.tilde))
            return "pair " + num(trial) + ": sector hom is not a weak equivalence";
        if (!is_weak_equivalence(A.reduced.gpd, B.reduced.gpd, hom.bar))
            return "pair " + num(trial) + ": reduced hom is not a weak equivalence";
        if (!check_naturality(A, B, infl.inclusion))
            return "pair " + num(trial) + ": comparison square does not commute";
        for (int n = 0; n <= 1; ++n)
            if (stable_pi_orb(A, n).group != stable_pi_orb(B, n).group)
                return "pair " + num(trial) + ": stable degree " + num(n) + " differs";
        for (std::size_t p = 0; p < A.tilde.space.points.size(); ++p)
            for (int n = 1; n <= 2; ++n)
                if (!are_isomorphic(extended_pi(A, static_cast<int>(p), n),
                                    extended_pi(B, hom.point_map[p], n)))
                    return "pair " + num(trial) + ": pi_" + num(n) + " differs at sector point " +
                           num(p);
    }
    if (elapsed(t0) >= kInflationLimit)
        return "runtime over " + num((long long)kInflationLimit) + "s";
    return "";
}

// 4. Homology of one-object cyclic groupoids against the two-periodic
// oracle: H_0 = Z, H_odd = Z/m, H_even>0 = 0.
constexpr double kHomologyLimit = 120.0;

std::string cyclic_homology() {
    const auto t0 = Clock::now();
    for (int m : {2, 3, 4}) {
        const FiniteGroupoid B = from_group(cyclic_group(m));
        for (int n = 0; n <= 3; ++n) {
            FGAbelianGroup want;
            if (n == 0)
                want.free_rank = 1;
            else if (n % 2 == 1)
                want.torsion = {m};
            const FGAbelianGroup got = homology(B, n);
            if (got != want)
                return "H_" + num(n) + " of B(Z/" + num(m) + ") = " + got.to_string() +
                       ", oracle says " + want.to_string();
        }
    }
    if (elapsed(t0) >= kHomologyLimit)
        return "runtime over " + num((long long)kHomologyLimit) + "s";
    return "";
}

// 5. Degree-0 equivariant assembly on every transitive G-set of five test
// groups: the assembled group must be free of rank equal to an orbit count
// (components of X^H / W_G H, summed over subgroup classes) recomputed here
// from the action alone.
std::string tom_dieck_rank() {
    std::vector<FiniteGroup> gs;
    gs.push_back(cyclic_group(2));
    gs.push_back(cyclic_group(4));
    gs.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
    gs.push_back(symmetric_group(3));
    gs.push_back(dihedral_group(4));
    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
        const FiniteGroup& G = gs[gi];
        const auto classes = conjugacy_classes_of_subgroups(G);
        for (std::size_t ci = 0; ci < classes.size(); ++ci) {
            const GroupAction X = coset_action(G, classes[ci][0]);
            const TomDieckResult r = equivariant_stable_pi(G, X, 0);
            int orbit_total = 0;
            for (const auto& cls : classes) {
                const WeylFixedAction w = weyl_fixed_action(G, X, cls[0]);
                orbit_total += static_cast<int>(orbits(w.group, w.action).size());
            }
            if (!r.rank_matches || r.independent_rank != orbit_total ||
                r.assembled != FGAbelianGroup{orbit_total, {}})
                return "group " + num(gi) + ", transitive set " + num(ci) + ": assembled " +
                       r.assembled.to_string() + ", independent orbit count " + num(orbit_total);
        }
    }
    return "";
}

// 6. Paired global-quotient presentations of one orbifold (a free factor
// added to both the group and the set) must verify as equivalent with
// equal stable groups in degrees 0 and 1.
constexpr int kPresentationPairs = 20;

std::string presentation_independence() {
    testgen::Rng rng(9006);
    for (int trial = 0; trial < kPresentationPairs; ++trial) {
        const testgen::PresentationPair p = testgen::presentation_pair(rng);
        const InvarianceReport rep = verify_presentation_independence(p.g1, p.x1, p.g2, p.x2);
        if (!rep.morita)
            return "pair " + num(trial) + " (|G1|=" + num(p.g1.order()) + ", |G2|=" +
                   num(p.g2.order()) + "): " + rep.morita_reason;
        for (const auto& d : rep.degrees)
            if (!d.all_equal)
                return "pair " + num(trial) + ": degree " + num(d.degree) + " groups differ";
        if (!rep.verified) return "pair " + num(trial) + ": report not verified";
    }
    return "";
}

// 7. At a trivial-stratum point the extended homotopy is the base homotopy:
// pi_n of (x, <1>) matches pi_n at x for every object, n <= 2.
std::string untwisted_identification() {
    testgen::Rng rng(9007);
    std::vector<FiniteGroupoid> instances;
    for (int trial = 0; trial < 15; ++trial) {
        const FiniteGroup G = testgen::random_group_capped(rng, 12);
        instances.push_back(translation_groupoid(G, testgen::random_gset(G, rng, 8)));
    }
    instances.push_back(from_group(cyclic_group(6)));
    instances.push_back(from_group(symmetric_group(3)));
    instances.push_back(from_group(dihedral_group(4)));
    {
        const FiniteGroup c2 = cyclic_group(2);
        instances.push_back(
            disjoint_union({from_group(symmetric_group(3)),
                            translation_groupoid(c2, regular_action(c2))}).gpd);
    }
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const FiniteGroupoid& T = instances[i];
        const SectorContext ctx = build_sectors(T);
        for (int x = 0; x < T.n_objects; ++x) {
            const int p = ctx.tilde.space.point_index(x, {T.unit[x]});
            if (p < 0) return "instance " + num(i) + ": no trivial sector over object " + num(x);
            for (int n = 1; n <= 2; ++n)
                if (!are_isomorphic(extended_pi(ctx, p, n), pi_orb(T, x, n)))
                    return "instance " + num(i) + ": pi_" + num(n) + " mismatch at object " +
                           num(x);
        }
    }
    return "";
}

// 8. Free quotients look like their orbit set: H_n of G⋉X for free X equals
// H_n of the discrete orbit groupoid, n <= 2.
constexpr int kFreeTrials = 20;

std::string free_quotient_homology() {
    testgen::Rng rng(9008);
    for (int trial = 0; trial < kFreeTrials; ++trial) {
        const FiniteGroup G = testgen::random_group_capped(rng, 8);
        const GroupAction X = testgen::random_free_gset(G, rng, 3);
        if (!is_free_action(G, X))
            return "trial " + num(trial) + ": generator produced a non-free set";
        const FiniteGroupoid T = translation_groupoid(G, X);
        const FiniteGroupoid U = unit_groupoid(static_cast<int>(orbits(G, X).size()));
        for (int n = 0; n <= 2; ++n) {
            const FGAbelianGroup ht = homology(T, n);
            const FGAbelianGroup hu = homology(U, n);
            if (ht != hu)
                return "trial " + num(trial) + ": H_" + num(n) + " = " + ht.to_string() +
                       " but the orbit set has " + hu.to_string();
        }
    }
    return "";
}

struct Gate {
    int id;
    const char* what;
    std::string (*run)();
};

}  // namespace

int main() {
    const Gate gates[] = {
        {1, "sector space = disjoint union of fixed-point sets", &sector_identity},
        {2, "each stratum holds |H|! ordered tuples per point", &factorial_strata},
        {3, "sector invariants survive component inflation", &inflation_invariance},
        {4, "cyclic classifying-space homology is two-periodic", &cyclic_homology},
        {5, "degree-0 assembly counts fixed-orbit components", &tom_dieck_rank},
        {6, "paired quotient presentations agree stably", &presentation_independence},
        {7, "trivial-stratum homotopy equals base homotopy", &untwisted_identification},
        {8, "free quotients have orbit-set homology", &free_quotient_homology},
    };
    int failures = 0;
    for (const Gate& g : gates) {
        const auto t0 = Clock::now();
        std::string err;
        try {
            err = g.run();
        } catch (const std::exception& e) {
            err = std::string("unexpected exception: ") + e.what();
        }
        char dt[32];
        std::snprintf(dt, sizeof dt, "%.1fs", elapsed(t0));
        if (err.empty()) {
            std::printf("PASS criterion %d: %s (%s)\n", g.id, g.what, dt);
        } else {
            std::printf("FAIL criterion %d: %s (%s): %s\n", g.id, g.what, dt, err.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("all 8 criteria passed\n");
    else
        std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
