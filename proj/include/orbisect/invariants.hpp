#pragma once

#include <string>
#include <vector>

#include "orbisect/fg_abelian.hpp"
#include "orbisect/group_action.hpp"
#include "orbisect/sectors.hpp"

namespace orbisect {

/// Homotopy of the classifying space at a base object. Degree 1 is the
/// isotropy group of the base's component (taken at the skeleton object);
/// degree >= 2 is trivial: the classifying space of a finite groupoid is a
/// disjoint union of aspherical spaces.
FiniteGroup pi_orb(const FiniteGroupoid& G, int x, int n);

/// Same on the sector groupoid, based at a sector point.
FiniteGroup extended_pi(const SectorContext& ctx, int point, int n);

/// One component of a classifying space with its stable low-degree data.
struct ComponentSummand {
    int rep_object = -1;       // least object of the component
    std::string label;         // stratum label when meaningful, else empty
    int isotropy_order = 0;
    FGAbelianGroup h1;         // abelianization of the isotropy group
    FGAbelianGroup summand;    // degree 0: Z; degree 1: Z/2 ⊕ h1
};

struct StableResult {
    int degree = 0;
    FGAbelianGroup group;
    std::vector<ComponentSummand> components;
};

/// Stable homotopy of a disjoint union of aspherical spaces with a disjoint
/// base point, degrees 0 and 1: degree 0 is free on the components; degree 1
/// contributes, per component, the stable 1-stem of the split-off sphere
/// (order 2) plus H_1 = the abelianized fundamental group.
StableResult stable_of_classifying_space(const FiniteGroupoid& B, int n);

/// The groupoid invariant: the formula above applied to the reduced sector
/// groupoid, components labeled by stratum.
StableResult stable_pi_orb(const SectorContext& ctx, int n);

/// Variant on the unreduced sector groupoid (normalizers instead of Weyl
/// groups); exposed separately, not the default reading.
StableResult stable_pi_orb_unreduced(const SectorContext& ctx, int n);

/// Per-conjugacy-class piece of the equivariant stable decomposition.
struct TomDieckSummand {
    Subgroup class_rep;                     // subgroup of G, class representative
    int weyl_order = 0;
    int fixed_count = 0;                    // |X^H|
    int component_count = 0;                // components of W ⋉ X^H
    FGAbelianGroup group;                   // the class's contribution in the degree
};

struct TomDieckResult {
    int degree = 0;
    FGAbelianGroup assembled;
    std::vector<TomDieckSummand> summands;
    int independent_rank = 0;  // #orbits of X^H under W, summed over classes
    bool rank_matches = false; // total component count vs independent_rank
};

/// Degree-0/1 equivariant stable homotopy assembled over subgroup classes:
/// for each (H), the stable invariant of B(W_G H ⋉ X^H) with disjoint base
/// point. Degree 0 is cross-checked against an orbit count computed from the
/// group action alone.
TomDieckResult equivariant_stable_pi(const FiniteGroup& G, const GroupAction& X, int n,
                                     int order_cap = kDefaultOrderCap);

/// Three-way comparison for two global-quotient presentations: equivariant
/// assembly of each presentation against the sector invariant of each
/// translation groupoid, degrees 0 and 1.
struct InvarianceReport {
    bool morita = false;
    std::string morita_reason;
    struct Degree {
        int degree = 0;
        FGAbelianGroup equivariant_first, equivariant_second;
        FGAbelianGroup sector_first, sector_second;
        bool all_equal = false;
    };
    std::vector<Degree> degrees;  // degree 0 and 1
    bool verified = false;        // morita and all degrees agree
};
InvarianceReport verify_presentation_independence(const FiniteGroup& G1, const GroupAction& X1,
                                                  const FiniteGroup& G2, const GroupAction& X2,
                                                  int order_cap = kDefaultOrderCap);

}  // namespace orbisect
