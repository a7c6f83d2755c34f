#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orbisect/groupoid.hpp"

namespace orbisect {

/// A left action of a groupoid G on a finite set over G_0: each point e
/// sits over the object anchor[e], and an arrow g with src[g] == anchor[e]
/// moves e to a point over tgt[g].
struct GroupoidAction {
    int carrier = 0;
    std::vector<int> anchor;  // point -> object
    std::unordered_map<std::uint64_t, int> mu;  // (arrow, point) -> point
    std::vector<std::string> point_labels;

    static std::uint64_t key(int g, int e) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
               static_cast<std::uint32_t>(e);
    }
    void set_act(int g, int e, int out) { mu[key(g, e)] = out; }
    int act(int g, int e) const { return mu.at(key(g, e)); }
};

void validate_groupoid_action(const FiniteGroupoid& G, const GroupoidAction& E,
                              const std::string& where = "groupoid action");

/// The translation groupoid G ⋉ E of a groupoid action, with the pair
/// decoding of arrows and the projection homomorphism onto G.
struct ActionGroupoid {
    FiniteGroupoid gpd;
    std::vector<std::pair<int, int>> arrow_pair;      // arrow -> (G arrow, point)
    std::unordered_map<std::uint64_t, int> arrow_at;  // (G arrow, point) -> arrow
    GroupoidHom projection;                           // G ⋉ E -> G

    int arrow_of(int g, int e) const { return arrow_at.at(GroupoidAction::key(g, e)); }
};
ActionGroupoid action_groupoid(const FiniteGroupoid& G, const GroupoidAction& E);

/// φ*E for φ: A -> B and E over B: points are pairs (e, x) with
/// anchor_B(e) = φ(x), anchored at x; arrows of A act through φ.
struct PullbackAction {
    GroupoidAction action;
    std::vector<std::pair<int, int>> point_pair;      // point -> (E point, A object)
    std::unordered_map<std::uint64_t, int> point_at;  // (E point, A object) -> point

    int point_of(int e, int x) const { return point_at.at(GroupoidAction::key(e, x)); }
};
PullbackAction pullback_action(const FiniteGroupoid& A, const FiniteGroupoid& B,
                               const GroupoidHom& phi, const GroupoidAction& E);

/// point_map is an anchor-preserving, action-commuting bijection E1 -> E2.
bool is_equivariant_bijection(const FiniteGroupoid& G, const GroupoidAction& E1,
                              const GroupoidAction& E2, const std::vector<int>& point_map);

}  // namespace orbisect
