#include "orbisect/groupoid_action.hpp"

#include <algorithm>

#include "orbisect/errors.hpp"

namespace orbisect {

void validate_groupoid_action(const FiniteGroupoid& G, const GroupoidAction& E,
                              const std::string& where) {
    if (static_cast<int>(E.anchor.size()) != E.carrier)
        throw AxiomViolation(where, "anchor defined on every point", "");
    for (int e = 0; e < E.carrier; ++e)
        if (E.anchor[e] < 0 || E.anchor[e] >= G.n_objects)
            throw AxiomViolation(where, "anchor lands in objects", "point " + std::to_string(e));
    std::size_t expected = 0;
    for (int e = 0; e < E.carrier; ++e)
        for (int g = 0; g < G.n_arrows; ++g)
            if (G.src[g] == E.anchor[e]) ++expected;
    if (E.mu.size() != expected)
        throw AxiomViolation(where, "action defined exactly on anchored pairs",
                             std::to_string(E.mu.size()) + " entries, expected " +
                                 std::to_string(expected));
    for (const auto& [k, out] : E.mu) {
        int g = static_cast<int>(k >> 32), e = static_cast<int>(k & 0xffffffffu);
        if (g < 0 || g >= G.n_arrows || e < 0 || e >= E.carrier || G.src[g] != E.anchor[e])
            throw AxiomViolation(where, "action key is an anchored pair",
                                 std::to_string(g) + "," + std::to_string(e));
        if (out < 0 || out >= E.carrier || E.anchor[out] != G.tgt[g])
            throw AxiomViolation(where, "moved point anchored at the arrow target",
                                 std::to_string(g) + "," + std::to_string(e));
    }
    for (int e = 0; e < E.carrier; ++e)
        if (E.act(G.unit[E.anchor[e]], e) != e)
            throw AxiomViolation(where, "units act trivially", "point " + std::to_string(e));
    for (int e = 0; e < E.carrier; ++e)
        for (int g = 0; g < G.n_arrows; ++g) {
            if (G.src[g] != E.anchor[e]) continue;
            int ge = E.act(g, e);
            for (int h = 0; h < G.n_arrows; ++h)
                if (G.src[h] == G.tgt[g] && E.act(h, ge) != E.act(G.compose(h, g), e))
                    throw AxiomViolation(where, "compatibility h.(g.e) = (h∘g).e",
                                         std::to_string(h) + "," + std::to_string(g) + "," +
                                             std::to_string(e));
        }
}

ActionGroupoid action_groupoid(const FiniteGroupoid& G, const GroupoidAction& E) {
    ActionGroupoid out;
    FiniteGroupoid& g = out.gpd;
    g.n_objects = E.carrier;
    g.object_labels = E.point_labels;
    // arrows (a, e) with src[a] == anchor[e], point-major for locality
    for (int e = 0; e < E.carrier; ++e)
        for (int a = 0; a < G.n_arrows; ++a) {
            if (G.src[a] != E.anchor[e]) continue;
            int idx = static_cast<int>(out.arrow_pair.size());
            out.arrow_pair.emplace_back(a, e);
            out.arrow_at[GroupoidAction::key(a, e)] = idx;
        }
    g.n_arrows = static_cast<int>(out.arrow_pair.size());
    g.src.resize(g.n_arrows);
    g.tgt.resize(g.n_arrows);
    g.inv.resize(g.n_arrows);
    g.unit.resize(g.n_objects);
    g.arrow_labels.resize(g.n_arrows);
    for (int i = 0; i < g.n_arrows; ++i) {
        auto [a, e] = out.arrow_pair[i];
        g.src[i] = e;
        g.tgt[i] = E.act(a, e);
        g.inv[i] = -1;  // filled below
        if (!G.arrow_labels.empty() && !E.point_labels.empty())
            g.arrow_labels[i] = G.arrow_labels[a] + "|" + E.point_labels[e];
        else
            g.arrow_labels[i] = "a" + std::to_string(a) + "|" + std::to_string(e);
    }
    for (int i = 0; i < g.n_arrows; ++i) {
        auto [a, e] = out.arrow_pair[i];
        g.inv[i] = out.arrow_of(G.inv[a], E.act(a, e));
    }
    for (int e = 0; e < E.carrier; ++e) g.unit[e] = out.arrow_of(G.unit[E.anchor[e]], e);
    for (int i = 0; i < g.n_arrows; ++i) {
        auto [a, e] = out.arrow_pair[i];  // e -> a.e
        int ae = E.act(a, e);
        for (int b = 0; b < G.n_arrows; ++b) {
            if (G.src[b] != G.tgt[a]) continue;
            int j = out.arrow_of(b, ae);
            g.set_compose(j, i, out.arrow_of(G.compose(b, a), e));
        }
    }
    out.projection.obj_map = E.anchor;
    out.projection.arrow_map.resize(g.n_arrows);
    for (int i = 0; i < g.n_arrows; ++i) out.projection.arrow_map[i] = out.arrow_pair[i].first;
    return out;
}

PullbackAction pullback_action(const FiniteGroupoid& A, [[maybe_unused]] const FiniteGroupoid& B,
                               const GroupoidHom& phi, const GroupoidAction& E) {
    PullbackAction out;
    GroupoidAction& P = out.action;
    for (int x = 0; x < A.n_objects; ++x)
        for (int e = 0; e < E.carrier; ++e) {
            if (E.anchor[e] != phi.obj_map[x]) continue;
            int idx = static_cast<int>(out.point_pair.size());
            out.point_pair.emplace_back(e, x);
            out.point_at[GroupoidAction::key(e, x)] = idx;
            P.anchor.push_back(x);
            P.point_labels.push_back((E.point_labels.empty() ? "e" + std::to_string(e)
                                                             : E.point_labels[e]) +
                                     "@" + std::to_string(x));
        }
    P.carrier = static_cast<int>(out.point_pair.size());
    for (int p = 0; p < P.carrier; ++p) {
        auto [e, x] = out.point_pair[p];
        for (int g = 0; g < A.n_arrows; ++g) {
            if (A.src[g] != x) continue;
            int e2 = E.act(phi.arrow_map[g], e);
            P.set_act(g, p, out.point_of(e2, A.tgt[g]));
        }
    }
    return out;
}

bool is_equivariant_bijection(const FiniteGroupoid& G, const GroupoidAction& E1,
                              const GroupoidAction& E2, const std::vector<int>& point_map) {
    if (E1.carrier != E2.carrier || static_cast<int>(point_map.size()) != E1.carrier) return false;
    std::vector<char> hit(E2.carrier, 0);
    for (int e = 0; e < E1.carrier; ++e) {
        int f = point_map[e];
        if (f < 0 || f >= E2.carrier || hit[f]) return false;
        hit[f] = 1;
        if (E2.anchor[f] != E1.anchor[e]) return false;
    }
    for (int e = 0; e < E1.carrier; ++e)
        for (int g = 0; g < G.n_arrows; ++g) {
            if (G.src[g] != E1.anchor[e]) continue;
            if (point_map[E1.act(g, e)] != E2.act(g, point_map[e])) return false;
        }
    return true;
}

}  // namespace orbisect
