#include "orbisect/invariants.hpp"

#include <algorithm>

#include "orbisect/errors.hpp"

namespace orbisect {

namespace {

int component_skeleton_object(const FiniteGroupoid& G, int x) {
    for (const auto& comp : components(G))
        if (std::binary_search(comp.begin(), comp.end(), x)) return comp.front();
    throw AxiomViolation("pi_orb", "base object", "object not found in any component");
}

FGAbelianGroup degree_one_summand(const FGAbelianGroup& h1) {
    // split-off sphere contributes the 1-stem (order 2), the space itself H_1
    return direct_sum(FGAbelianGroup{0, {2}}, h1);
}

}  // namespace

FiniteGroup pi_orb(const FiniteGroupoid& G, int x, int n) {
    if (x < 0 || x >= G.n_objects)
        throw AxiomViolation("pi_orb", "base object", "index out of range");
    if (n < 1) throw DegreeOutOfRange(n, "homotopy degree must be >= 1");
    if (n >= 2) return FiniteGroup();  // aspherical components
    return isotropy(G, component_skeleton_object(G, x)).group;
}

FiniteGroup extended_pi(const SectorContext& ctx, int point, int n) {
    return pi_orb(ctx.tilde.ag.gpd, point, n);
}

StableResult stable_of_classifying_space(const FiniteGroupoid& B, int n) {
    if (n != 0 && n != 1)
        throw DegreeOutOfRange(n, "stable invariant computed in degrees 0 and 1 only");
    StableResult res;
    res.degree = n;
    for (const auto& comp : components(B)) {
        ComponentSummand s;
        s.rep_object = comp.front();
        const IsotropyGroup iso = isotropy(B, s.rep_object);
        s.isotropy_order = iso.group.order();
        s.h1 = abelianization(iso.group);
        s.summand = (n == 0) ? FGAbelianGroup{1, {}} : degree_one_summand(s.h1);
        res.group = direct_sum(res.group, s.summand);
        res.components.push_back(std::move(s));
    }
    return res;
}

namespace {

StableResult stable_on_sector_groupoid(const SectorContext& ctx, const FiniteGroupoid& gpd,
                                       int n) {
    StableResult res = stable_of_classifying_space(gpd, n);
    const SectorSpace& space = ctx.tilde.space;
    for (auto& s : res.components)
        s.label = space.strata[space.stratum_of[s.rep_object]].label;
    return res;
}

}  // namespace

StableResult stable_pi_orb(const SectorContext& ctx, int n) {
    return stable_on_sector_groupoid(ctx, ctx.reduced.gpd, n);
}

StableResult stable_pi_orb_unreduced(const SectorContext& ctx, int n) {
    return stable_on_sector_groupoid(ctx, ctx.tilde.ag.gpd, n);
}

TomDieckResult equivariant_stable_pi(const FiniteGroup& G, const GroupAction& X, int n,
                                     int order_cap) {
    if (n != 0 && n != 1)
        throw DegreeOutOfRange(n, "stable invariant computed in degrees 0 and 1 only");
    if (G.order() > order_cap) throw OrderCapExceeded(G.order(), order_cap);

    TomDieckResult res;
    res.degree = n;
    int total_components = 0;
    for (const auto& cls : conjugacy_classes_of_subgroups(G)) {
        TomDieckSummand s;
        s.class_rep = cls.front();
        const WeylFixedAction w = weyl_fixed_action(G, X, s.class_rep);
        s.weyl_order = w.group.order();
        s.fixed_count = w.action.degree;
        if (w.action.degree > 0) {
            const FiniteGroupoid T = translation_groupoid(w.group, w.action);
            const StableResult st = stable_of_classifying_space(T, n);
            s.component_count = static_cast<int>(st.components.size());
            s.group = st.group;
            res.independent_rank += static_cast<int>(orbits(w.group, w.action).size());
        }
        total_components += s.component_count;
        res.assembled = direct_sum(res.assembled, s.group);
        res.summands.push_back(std::move(s));
    }
    res.rank_matches = (total_components == res.independent_rank);
    return res;
}

InvarianceReport verify_presentation_independence(const FiniteGroup& G1, const GroupAction& X1,
                                                  const FiniteGroup& G2, const GroupAction& X2,
                                                  int order_cap) {
    const FiniteGroupoid T1 = translation_groupoid(G1, X1);
    const FiniteGroupoid T2 = translation_groupoid(G2, X2);

    InvarianceReport report;
    const MoritaResult mor = morita_equivalent(T1, T2, order_cap);
    report.morita = mor.equivalent;
    report.morita_reason = mor.reason;

    const SectorContext ctx1 = build_sectors(T1, order_cap);
    const SectorContext ctx2 = build_sectors(T2, order_cap);

    bool degrees_agree = true;
    for (int n = 0; n <= 1; ++n) {
        InvarianceReport::Degree d;
        d.degree = n;
        d.equivariant_first = equivariant_stable_pi(G1, X1, n, order_cap).assembled;
        d.equivariant_second = equivariant_stable_pi(G2, X2, n, order_cap).assembled;
        d.sector_first = stable_pi_orb(ctx1, n).group;
        d.sector_second = stable_pi_orb(ctx2, n).group;
        d.all_equal = d.equivariant_first == d.equivariant_second &&
                      d.equivariant_second == d.sector_first && d.sector_first == d.sector_second;
        degrees_agree = degrees_agree && d.all_equal;
        report.degrees.push_back(std::move(d));
    }
    report.verified = report.morita && degrees_agree;
    return report;
}

}  // namespace orbisect
