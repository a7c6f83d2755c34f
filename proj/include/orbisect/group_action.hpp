#pragma once

#include <string>
#include <vector>

#include "orbisect/group.hpp"

namespace orbisect {

/// A left action of a finite group on the point set {0..degree-1},
/// stored as the full table g.x.
struct GroupAction {
    int degree = 0;
    std::vector<std::vector<int>> table;  // table[g][x] = g.x
    std::vector<std::string> point_labels;

    int act(int g, int x) const { return table[g][x]; }
    const std::string& label(int x) const { return point_labels[x]; }
};

/// Throws AxiomViolation (with witness) unless table rows are permutations,
/// the identity acts trivially and g.(h.x) = (gh).x throughout.
void validate_action(const FiniteGroup& G, const GroupAction& A, const std::string& where = "action");

GroupAction trivial_action(const FiniteGroup& G, int npoints);
GroupAction regular_action(const FiniteGroup& G);

/// Left multiplication on the left cosets gH. Transitive; every transitive
/// action arises this way up to equivariant bijection.
GroupAction coset_action(const FiniteGroup& G, const Subgroup& H);

GroupAction disjoint_union_action(const FiniteGroup& G, const std::vector<GroupAction>& parts);

/// Expand an action given only on generators. gens[i] acts as perms[i]
/// (one-line notation on npoints). Rejects non-generating sets and
/// inconsistent assignments.
GroupAction action_from_generator_images(const FiniteGroup& G, const std::vector<int>& gens,
                                         const std::vector<std::vector<int>>& perms, int npoints,
                                         const std::string& where = "action");

/// Points fixed by every element of H, sorted.
std::vector<int> fixed_points(const GroupAction& A, const Subgroup& H);

/// Orbits sorted by least point; each orbit sorted.
std::vector<std::vector<int>> orbits(const FiniteGroup& G, const GroupAction& A);

Subgroup stabilizer(const FiniteGroup& G, const GroupAction& A, int x);

bool is_free_action(const FiniteGroup& G, const GroupAction& A);
bool is_transitive_action(const FiniteGroup& G, const GroupAction& A);

/// The Weyl group W = N_G(H)/H together with its action on the H-fixed
/// points. point_in_parent maps the new point indices back to A's points.
struct WeylFixedAction {
    FiniteGroup group;  // W_G(H)
    GroupAction action;
    std::vector<int> point_in_parent;
};
WeylFixedAction weyl_fixed_action(const FiniteGroup& G, const GroupAction& A, const Subgroup& H);

}  // namespace orbisect
