#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "orbisect/groupoid.hpp"
#include "orbisect/groupoid_action.hpp"

namespace orbisect {

using bigint = boost::multiprecision::cpp_int;

constexpr long kDefaultSimplexBudget = 10'000'000;

/// An ordered tuple of isotropy arrows at a common object.
struct KTuple {
    std::vector<int> arrows;
    bool operator==(const KTuple&) const = default;
};

/// A point (x, H): an object together with a subgroup of its isotropy,
/// stored as the sorted set of realizing arrows. The sorted arrow list is
/// the canonical representative of the coordinate-permutation orbit.
struct SectorPoint {
    int base = -1;
    std::vector<int> arrows;  // sorted arrow indices, a subgroup of Hom(base, base)
    bool operator==(const SectorPoint&) const = default;
};

/// Points with isomorphic groups, gathered in first-seen order.
struct SectorStratum {
    FiniteGroup rep;          // abstract type of the stratum's groups
    std::string label;        // "H<order>.<seq>", deterministic
    std::vector<int> points;  // indices into SectorSpace::points, ascending
};

/// All fixed-point sectors of a groupoid with the conjugation action.
struct SectorSpace {
    std::vector<SectorPoint> points;   // grouped by stratum, then base, then arrows
    std::vector<SectorStratum> strata; // sorted by (group order, first seen)
    std::vector<int> stratum_of;       // point -> stratum
    GroupoidAction action;             // conjugation action over the groupoid

    int point_index(int base, const std::vector<int>& sorted_arrows) const;

  private:
    friend SectorSpace sector_space(const FiniteGroupoid&, int);
    std::map<std::pair<int, std::vector<int>>, int> index_;
};

/// All ordered k-tuples of isotropy arrows at a common object.
std::vector<KTuple> k_sectors(const FiniteGroupoid& G, int k,
                              long budget = kDefaultSimplexBudget);

/// Tuples of pairwise-distinct isotropy arrows whose set is a subgroup
/// isomorphic to H. Materializes |H|! orderings per subgroup.
std::vector<KTuple> p_h(const FiniteGroupoid& G, const FiniteGroup& H,
                        int order_cap = kDefaultOrderCap, long budget = kDefaultSimplexBudget);

/// |p_h(G, H)| without materializing (exact, arbitrary precision).
bigint p_h_count(const FiniteGroupoid& G, const FiniteGroup& H, int order_cap = kDefaultOrderCap);

bigint factorial(int n);

SectorSpace sector_space(const FiniteGroupoid& G, int order_cap = kDefaultOrderCap);

/// The sector groupoid G ⋉ S̃(G) with projection and the trivial-sector
/// embedding of G.
struct SectorGroupoid {
    SectorSpace space;
    ActionGroupoid ag;        // ag.gpd is the sector groupoid; ag.projection: G̃ -> G
    GroupoidHom embedding;    // G -> G̃, landing in the trivial stratum
};
SectorGroupoid sector_groupoid(const FiniteGroupoid& G, int order_cap = kDefaultOrderCap);

/// Arrows (l, (x,L)) of the sector groupoid with l ∈ L: a wide, normal,
/// totally intransitive subgroupoid.
std::vector<int> kernel_arrows(const FiniteGroupoid& G, const SectorGroupoid& S);

/// Everything the downstream invariants need, built once.
struct SectorContext {
    FiniteGroupoid base;
    SectorGroupoid tilde;
    QuotientResult reduced;  // reduced.gpd is Ḡ, objects = sector points
};
SectorContext build_sectors(const FiniteGroupoid& G, int order_cap = kDefaultOrderCap);

/// Induced homomorphisms on sector and reduced-sector groupoids of a
/// faithful homomorphism. Throws Unfaithful otherwise.
struct SectorHomResult {
    GroupoidHom tilde;  // G̃ -> H̃
    GroupoidHom bar;    // Ḡ -> H̄
    std::vector<int> point_map;  // sector points of G -> sector points of H
};
SectorHomResult induced_sector_hom(const SectorContext& A, const SectorContext& B,
                                   const GroupoidHom& phi);

/// For a weak equivalence φ: G -> H, builds the comparison map
/// S̃(G) -> φ*S̃(H) and its inverse and checks they are mutually inverse
/// equivariant bijections. A false return is an invariance counterexample.
bool check_naturality(const SectorContext& A, const SectorContext& B, const GroupoidHom& phi);

/// Connected components of the sector groupoid as sector-point sets:
/// the local conjugacy classes.
std::vector<std::vector<int>> local_components(const SectorGroupoid& S);

/// One entry per component of G̃: the orbit-space point (x̄, (H)_{G_x}).
struct KawasakiClass {
    int rep_point = -1;           // least sector point in the component
    int base = -1;                // its base object
    std::vector<int> isotropy_elems;  // subgroup as element indices of isotropy(base)
    std::string stratum_label;
    int size = 0;                 // number of sector points in the class
};
std::vector<KawasakiClass> kawasaki_quotient(const FiniteGroupoid& G, const SectorGroupoid& S);

/// The subgroup-classes diagram at an object: one node per conjugacy class
/// of subgroups of the isotropy group, an edge (H) -> (K) when H is
/// subconjugate to K, realized on sectors by a point map from the component
/// of (x,K) to the stratum of H. Point maps are canonical up to local
/// conjugation.
struct OrbitDiagram {
    int base_object = -1;
    IsotropyGroup iso;                                // isotropy at the base
    std::vector<std::vector<Subgroup>> classes;       // conjugacy classes, rep first
    struct Edge {
        int from = -1, to = -1;  // class indices, morphism (from) -> (to)
        int conj = -1;           // isotropy element g with g·rep(from)·g⁻¹ ≤ rep(to)
        std::vector<int> domain_points;  // sector points of the component of (x, rep(to))
        std::vector<int> point_map;      // image sector points, stratum of rep(from)
    };
    std::vector<Edge> edges;  // includes identity edges
};
OrbitDiagram orbit_category_diagram(const FiniteGroupoid& G, const SectorContext& ctx, int x);

/// Two sector-point maps agree modulo conjugation in the local groups:
/// same bases and conjugate subgroups at every point.
bool equal_mod_local_conjugation(const FiniteGroupoid& G, const SectorContext& ctx,
                                 const std::vector<int>& domain,
                                 const std::vector<int>& map1, const std::vector<int>& map2);

}  // namespace orbisect
