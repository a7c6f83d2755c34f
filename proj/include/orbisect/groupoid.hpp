#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "orbisect/group.hpp"
#include "orbisect/group_action.hpp"

namespace orbisect {

/// A finite groupoid: objects 0..n_objects-1, arrows 0..n_arrows-1.
/// compose(g, f) = g∘f (f applied first), defined iff tgt[f] == src[g];
/// the composition table holds exactly the composable pairs.
struct FiniteGroupoid {
    int n_objects = 0;
    int n_arrows = 0;
    std::vector<int> src, tgt;   // arrow -> object
    std::vector<int> unit;       // object -> arrow
    std::vector<int> inv;        // arrow -> arrow
    std::unordered_map<std::uint64_t, int> comp;
    std::vector<std::string> object_labels, arrow_labels;

    static std::uint64_t key(int g, int f) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
               static_cast<std::uint32_t>(f);
    }
    void set_compose(int g, int f, int gf) { comp[key(g, f)] = gf; }
    bool composable(int g, int f) const { return tgt[f] == src[g]; }
    int compose(int g, int f) const { return comp.at(key(g, f)); }

    std::vector<int> arrows_from(int x) const;
    std::vector<int> arrows_into(int x) const;
    std::vector<int> hom_set(int x, int y) const;  // arrows x -> y
};

enum class Check { Basic, Full };

/// Axiom suite. Basic: ranges, units, inverses, composition closure.
/// Full: adds associativity over all composable triples.
void validate_groupoid(const FiniteGroupoid& G, const std::string& where = "groupoid",
                       Check level = Check::Full);

struct GroupoidHom {
    std::vector<int> obj_map;    // G_0 -> H_0
    std::vector<int> arrow_map;  // G_1 -> H_1
};

GroupoidHom identity_hom(const FiniteGroupoid& G);
GroupoidHom compose_homs(const GroupoidHom& outer, const GroupoidHom& inner);

void validate_hom(const FiniteGroupoid& A, const FiniteGroupoid& B, const GroupoidHom& phi,
                  const std::string& where = "homomorphism");

/// Injective on every hom-set.
bool is_faithful(const FiniteGroupoid& A, const FiniteGroupoid& B, const GroupoidHom& phi);

FiniteGroupoid from_group(const FiniteGroup& G);
FiniteGroupoid unit_groupoid(int npoints, const std::vector<std::string>& labels = {});

/// G ⋉ X: objects = points, arrow g*degree+x : x -> g.x.
FiniteGroupoid translation_groupoid(const FiniteGroup& G, const GroupAction& A);

inline int trans_arrow(int g, int x, int degree) { return g * degree + x; }
inline int trans_elem(int arrow, int degree) { return arrow / degree; }
inline int trans_point(int arrow, int degree) { return arrow % degree; }

/// The isotropy group G_x = Hom(x,x) under composition, with the arrow
/// realization in both directions.
struct IsotropyGroup {
    FiniteGroup group;
    std::vector<int> arrow_of_elem;  // group element -> arrow index
    std::vector<int> elem_of_arrow;  // arrow index -> group element or -1
};
IsotropyGroup isotropy(const FiniteGroupoid& G, int x);

/// Connected components as sorted object lists, ordered by least object.
std::vector<std::vector<int>> components(const FiniteGroupoid& G);

/// Full subgroupoid on an object subset, with index maps back to the parent.
struct Subgroupoid {
    FiniteGroupoid gpd;
    std::vector<int> object_in_parent;
    std::vector<int> arrow_in_parent;
};
Subgroupoid full_subgroupoid(const FiniteGroupoid& G, const std::vector<int>& objs);

/// One object per component (the least), arrows its isotropy; the inclusion
/// homomorphism into G is a weak equivalence.
struct SkeletonResult {
    FiniteGroupoid gpd;
    GroupoidHom inclusion;               // skeleton -> G
    std::vector<int> object_in_parent;   // skeleton object -> G object
};
SkeletonResult skeleton(const FiniteGroupoid& G);

/// Essentially surjective and fully faithful.
bool is_weak_equivalence(const FiniteGroupoid& A, const FiniteGroupoid& B, const GroupoidHom& phi);

/// Morita equivalence via skeleton matching. When equivalent, the
/// certificate pairs up components and gives an isotropy isomorphism
/// for each matched pair.
struct MoritaMatch {
    int object_a = -1, object_b = -1;        // skeleton objects in A and B
    std::vector<int> group_iso;              // isotropy(A,a) -> isotropy(B,b), element map
};
struct MoritaResult {
    bool equivalent = false;
    std::vector<MoritaMatch> matches;
    std::string reason;  // set when not equivalent
};
MoritaResult morita_equivalent(const FiniteGroupoid& A, const FiniteGroupoid& B,
                               int order_cap = kDefaultOrderCap);

/// Quotient by a wide, normal, totally intransitive subgroupoid given as an
/// arrow subset. Objects unchanged; arrows become K-cosets.
struct QuotientResult {
    FiniteGroupoid gpd;
    std::vector<int> arrow_class;  // parent arrow -> quotient arrow
    std::vector<int> class_rep;    // quotient arrow -> least parent arrow
};
QuotientResult quotient_by_normal_wide_subgroupoid(const FiniteGroupoid& G,
                                                   const std::vector<int>& kernel_arrows,
                                                   const std::string& where = "quotient");

/// Disjoint union with index offsets per part.
struct DisjointUnion {
    FiniteGroupoid gpd;
    std::vector<int> object_offset, arrow_offset;  // per part
};
DisjointUnion disjoint_union(const std::vector<FiniteGroupoid>& parts);

}  // namespace orbisect
