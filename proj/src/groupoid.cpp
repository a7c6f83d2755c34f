#include "orbisect/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "orbisect/errors.hpp"

namespace orbisect {

std::vector<int> FiniteGroupoid::arrows_from(int x) const {
    std::vector<int> out;
    for (int a = 0; a < n_arrows; ++a)
        if (src[a] == x) out.push_back(a);
    return out;
}

std::vector<int> FiniteGroupoid::arrows_into(int x) const {
    std::vector<int> out;
    for (int a = 0; a < n_arrows; ++a)
        if (tgt[a] == x) out.push_back(a);
    return out;
}

std::vector<int> FiniteGroupoid::hom_set(int x, int y) const {
    std::vector<int> out;
    for (int a = 0; a < n_arrows; ++a)
        if (src[a] == x && tgt[a] == y) out.push_back(a);
    return out;
}

void validate_groupoid(const FiniteGroupoid& G, const std::string& where, Check level) {
    if (G.n_objects < 0 || G.n_arrows < 0)
        throw AxiomViolation(where, "nonnegative sizes", "");
    auto arrow_name = [&](int a) {
        return a >= 0 && a < static_cast<int>(G.arrow_labels.size()) ? G.arrow_labels[a]
                                                                     : "#" + std::to_string(a);
    };
    if (static_cast<int>(G.src.size()) != G.n_arrows ||
        static_cast<int>(G.tgt.size()) != G.n_arrows ||
        static_cast<int>(G.inv.size()) != G.n_arrows)
        throw AxiomViolation(where, "src/tgt/inv defined on every arrow", "");
    if (static_cast<int>(G.unit.size()) != G.n_objects)
        throw AxiomViolation(where, "one unit per object", "");
    for (int a = 0; a < G.n_arrows; ++a) {
        if (G.src[a] < 0 || G.src[a] >= G.n_objects || G.tgt[a] < 0 || G.tgt[a] >= G.n_objects)
            throw AxiomViolation(where, "arrow endpoints are objects", arrow_name(a));
        if (G.inv[a] < 0 || G.inv[a] >= G.n_arrows)
            throw AxiomViolation(where, "inverse in range", arrow_name(a));
        if (G.src[G.inv[a]] != G.tgt[a] || G.tgt[G.inv[a]] != G.src[a])
            throw AxiomViolation(where, "inverse swaps endpoints", arrow_name(a));
    }
    for (int x = 0; x < G.n_objects; ++x) {
        int u = G.unit[x];
        if (u < 0 || u >= G.n_arrows || G.src[u] != x || G.tgt[u] != x)
            throw AxiomViolation(where, "unit is an isotropy arrow at its object",
                                 "object " + std::to_string(x));
    }
    // composition defined exactly on composable pairs, endpoints correct
    std::size_t expected = 0;
    for (int f = 0; f < G.n_arrows; ++f)
        for (int g = 0; g < G.n_arrows; ++g)
            if (G.composable(g, f)) ++expected;
    if (G.comp.size() != expected)
        throw AxiomViolation(where, "composition defined exactly on composable pairs",
                             std::to_string(G.comp.size()) + " entries, expected " +
                                 std::to_string(expected));
    for (const auto& [k, gf] : G.comp) {
        int g = static_cast<int>(k >> 32), f = static_cast<int>(k & 0xffffffffu);
        if (f < 0 || f >= G.n_arrows || g < 0 || g >= G.n_arrows || !G.composable(g, f))
            throw AxiomViolation(where, "composition key is a composable pair",
                                 std::to_string(g) + "," + std::to_string(f));
        if (gf < 0 || gf >= G.n_arrows || G.src[gf] != G.src[f] || G.tgt[gf] != G.tgt[g])
            throw AxiomViolation(where, "composite endpoints", arrow_name(g) + "∘" + arrow_name(f));
    }
    for (int a = 0; a < G.n_arrows; ++a) {
        if (G.compose(a, G.unit[G.src[a]]) != a || G.compose(G.unit[G.tgt[a]], a) != a)
            throw AxiomViolation(where, "units are neutral", arrow_name(a));
        if (G.compose(G.inv[a], a) != G.unit[G.src[a]] ||
            G.compose(a, G.inv[a]) != G.unit[G.tgt[a]])
            throw AxiomViolation(where, "two-sided inverse", arrow_name(a));
    }
    if (level == Check::Full) {
        for (int f = 0; f < G.n_arrows; ++f)
            for (int g = 0; g < G.n_arrows; ++g) {
                if (!G.composable(g, f)) continue;
                int gf = G.compose(g, f);
                for (int h = 0; h < G.n_arrows; ++h) {
                    if (!G.composable(h, g)) continue;
                    if (G.compose(G.compose(h, g), f) != G.compose(h, gf))
                        throw AxiomViolation(where, "associativity",
                                             arrow_name(h) + "," + arrow_name(g) + "," +
                                                 arrow_name(f));
                }
            }
    }
}

GroupoidHom identity_hom(const FiniteGroupoid& G) {
    GroupoidHom phi;
    phi.obj_map.resize(G.n_objects);
    phi.arrow_map.resize(G.n_arrows);
    std::iota(phi.obj_map.begin(), phi.obj_map.end(), 0);
    std::iota(phi.arrow_map.begin(), phi.arrow_map.end(), 0);
    return phi;
}

GroupoidHom compose_homs(const GroupoidHom& outer, const GroupoidHom& inner) {
    GroupoidHom phi;
    phi.obj_map.resize(inner.obj_map.size());
    phi.arrow_map.resize(inner.arrow_map.size());
    for (std::size_t i = 0; i < inner.obj_map.size(); ++i)
        phi.obj_map[i] = outer.obj_map[inner.obj_map[i]];
    for (std::size_t i = 0; i < inner.arrow_map.size(); ++i)
        phi.arrow_map[i] = outer.arrow_map[inner.arrow_map[i]];
    return phi;
}

void validate_hom(const FiniteGroupoid& A, const FiniteGroupoid& B, const GroupoidHom& phi,
                  const std::string& where) {
    if (static_cast<int>(phi.obj_map.size()) != A.n_objects ||
        static_cast<int>(phi.arrow_map.size()) != A.n_arrows)
        throw AxiomViolation(where, "maps defined on all objects and arrows", "");
    for (int x = 0; x < A.n_objects; ++x)
        if (phi.obj_map[x] < 0 || phi.obj_map[x] >= B.n_objects)
            throw AxiomViolation(where, "object image in range", std::to_string(x));
    for (int a = 0; a < A.n_arrows; ++a) {
        int b = phi.arrow_map[a];
        if (b < 0 || b >= B.n_arrows)
            throw AxiomViolation(where, "arrow image in range", std::to_string(a));
        if (B.src[b] != phi.obj_map[A.src[a]] || B.tgt[b] != phi.obj_map[A.tgt[a]])
            throw AxiomViolation(where, "source and target preserved", "arrow " + std::to_string(a));
    }
    for (int x = 0; x < A.n_objects; ++x)
        if (phi.arrow_map[A.unit[x]] != B.unit[phi.obj_map[x]])
            throw AxiomViolation(where, "units preserved", "object " + std::to_string(x));
    for (int f = 0; f < A.n_arrows; ++f)
        for (int g = 0; g < A.n_arrows; ++g)
            if (A.composable(g, f) &&
                phi.arrow_map[A.compose(g, f)] != B.compose(phi.arrow_map[g], phi.arrow_map[f]))
                throw AxiomViolation(where, "composition preserved",
                                     std::to_string(g) + "∘" + std::to_string(f));
}

bool is_faithful(const FiniteGroupoid& A, const FiniteGroupoid& B, const GroupoidHom& phi) {
    (void)B;
    // injective on each hom-set: same endpoints and same image means equal
    std::map<std::tuple<int, int, int>, int> seen;  // (src, tgt, image) -> arrow
    for (int a = 0; a < A.n_arrows; ++a) {
        auto k = std::make_tuple(A.src[a], A.tgt[a], phi.arrow_map[a]);
        auto [it, fresh] = seen.emplace(k, a);
        if (!fresh) return false;
    }
    return true;
}

FiniteGroupoid from_group(const FiniteGroup& G) {
    FiniteGroupoid out;
    out.n_objects = 1;
    out.n_arrows = G.order();
    out.src.assign(G.order(), 0);
    out.tgt.assign(G.order(), 0);
    out.unit = {G.identity()};
    out.inv.resize(G.order());
    for (int a = 0; a < G.order(); ++a) {
        out.inv[a] = G.inv(a);
        for (int b = 0; b < G.order(); ++b) out.set_compose(a, b, G.mul(a, b));
    }
    out.object_labels = {"*"};
    out.arrow_labels = G.labels();
    return out;
}

FiniteGroupoid unit_groupoid(int npoints, const std::vector<std::string>& labels) {
    FiniteGroupoid out;
    out.n_objects = npoints;
    out.n_arrows = npoints;
    out.src.resize(npoints);
    out.tgt.resize(npoints);
    out.unit.resize(npoints);
    out.inv.resize(npoints);
    std::iota(out.src.begin(), out.src.end(), 0);
    out.tgt = out.src;
    out.unit = out.src;
    out.inv = out.src;
    for (int x = 0; x < npoints; ++x) out.set_compose(x, x, x);
    out.object_labels.resize(npoints);
    for (int x = 0; x < npoints; ++x)
        out.object_labels[x] =
            x < static_cast<int>(labels.size()) ? labels[x] : "p" + std::to_string(x);
    out.arrow_labels.resize(npoints);
    for (int x = 0; x < npoints; ++x) out.arrow_labels[x] = "id:" + out.object_labels[x];
    return out;
}

FiniteGroupoid translation_groupoid(const FiniteGroup& G, const GroupAction& A) {
    validate_action(G, A, "translation groupoid");
    const int d = A.degree;
    FiniteGroupoid out;
    out.n_objects = d;
    out.n_arrows = G.order() * d;
    out.src.resize(out.n_arrows);
    out.tgt.resize(out.n_arrows);
    out.inv.resize(out.n_arrows);
    out.unit.resize(d);
    out.object_labels = A.point_labels;
    out.arrow_labels.resize(out.n_arrows);
    for (int g = 0; g < G.order(); ++g)
        for (int x = 0; x < d; ++x) {
            int a = trans_arrow(g, x, d);
            out.src[a] = x;
            out.tgt[a] = A.act(g, x);
            out.inv[a] = trans_arrow(G.inv(g), A.act(g, x), d);
            out.arrow_labels[a] = G.label(g) + "|" + A.point_labels[x];
        }
    for (int x = 0; x < d; ++x) out.unit[x] = trans_arrow(G.identity(), x, d);
    out.comp.reserve(static_cast<std::size_t>(out.n_arrows) * G.order());
    for (int g = 0; g < G.order(); ++g)
        for (int x = 0; x < d; ++x) {
            int f = trans_arrow(g, x, d);  // x -> g.x
            int y = out.tgt[f];
            for (int h = 0; h < G.order(); ++h)
                out.set_compose(trans_arrow(h, y, d), f, trans_arrow(G.mul(h, g), x, d));
        }
    return out;
}

IsotropyGroup isotropy(const FiniteGroupoid& G, int x) {
    IsotropyGroup out;
    out.elem_of_arrow.assign(G.n_arrows, -1);
    for (int a = 0; a < G.n_arrows; ++a)
        if (G.src[a] == x && G.tgt[a] == x) {
            out.elem_of_arrow[a] = static_cast<int>(out.arrow_of_elem.size());
            out.arrow_of_elem.push_back(a);
        }
    const int n = static_cast<int>(out.arrow_of_elem.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = G.arrow_labels.empty() ? "a" + std::to_string(out.arrow_of_elem[i])
                                           : G.arrow_labels[out.arrow_of_elem[i]];
        for (int j = 0; j < n; ++j)
            table[i][j] = out.elem_of_arrow[G.compose(out.arrow_of_elem[i], out.arrow_of_elem[j])];
    }
    out.group = FiniteGroup::from_table(table, labels, "isotropy");
    return out;
}

std::vector<std::vector<int>> components(const FiniteGroupoid& G) {
    std::vector<std::vector<int>> adj(G.n_objects);
    for (int a = 0; a < G.n_arrows; ++a) {
        adj[G.src[a]].push_back(G.tgt[a]);
        adj[G.tgt[a]].push_back(G.src[a]);
    }
    std::vector<int> comp_of(G.n_objects, -1);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < G.n_objects; ++x) {
        if (comp_of[x] >= 0) continue;
        std::vector<int> stack = {x}, members;
        comp_of[x] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            members.push_back(y);
            for (int z : adj[y])
                if (comp_of[z] < 0) {
                    comp_of[z] = comp_of[x];
                    stack.push_back(z);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

Subgroupoid full_subgroupoid(const FiniteGroupoid& G, const std::vector<int>& objs) {
    Subgroupoid out;
    out.object_in_parent = objs;
    std::vector<int> obj_pos(G.n_objects, -1);
    for (std::size_t i = 0; i < objs.size(); ++i) obj_pos[objs[i]] = static_cast<int>(i);
    std::vector<int> arr_pos(G.n_arrows, -1);
    for (int a = 0; a < G.n_arrows; ++a)
        if (obj_pos[G.src[a]] >= 0 && obj_pos[G.tgt[a]] >= 0) {
            arr_pos[a] = static_cast<int>(out.arrow_in_parent.size());
            out.arrow_in_parent.push_back(a);
        }
    FiniteGroupoid& g = out.gpd;
    g.n_objects = static_cast<int>(objs.size());
    g.n_arrows = static_cast<int>(out.arrow_in_parent.size());
    g.src.resize(g.n_arrows);
    g.tgt.resize(g.n_arrows);
    g.inv.resize(g.n_arrows);
    g.unit.resize(g.n_objects);
    for (int i = 0; i < g.n_arrows; ++i) {
        int a = out.arrow_in_parent[i];
        g.src[i] = obj_pos[G.src[a]];
        g.tgt[i] = obj_pos[G.tgt[a]];
        g.inv[i] = arr_pos[G.inv[a]];
        if (!G.arrow_labels.empty()) g.arrow_labels.push_back(G.arrow_labels[a]);
    }
    for (int i = 0; i < g.n_objects; ++i) {
        g.unit[i] = arr_pos[G.unit[objs[i]]];
        if (!G.object_labels.empty()) g.object_labels.push_back(G.object_labels[objs[i]]);
    }
    for (int fi = 0; fi < g.n_arrows; ++fi)
        for (int gi = 0; gi < g.n_arrows; ++gi)
            if (g.composable(gi, fi))
                g.set_compose(gi, fi,
                              arr_pos[G.compose(out.arrow_in_parent[gi], out.arrow_in_parent[fi])]);
    return out;
}

SkeletonResult skeleton(const FiniteGroupoid& G) {
    auto comps = components(G);
    std::vector<int> picks;
    picks.reserve(comps.size());
    for (const auto& c : comps) picks.push_back(c.front());  // least object
    Subgroupoid sub = full_subgroupoid(G, picks);
    SkeletonResult out;
    out.gpd = std::move(sub.gpd);
    out.object_in_parent = sub.object_in_parent;
    out.inclusion.obj_map = sub.object_in_parent;
    out.inclusion.arrow_map = sub.arrow_in_parent;
    return out;
}

bool is_weak_equivalence(const FiniteGroupoid& A, const FiniteGroupoid& B, const GroupoidHom& phi) {
    validate_hom(A, B, phi, "weak equivalence candidate");
    // essentially surjective: each B-object connected to an image object
    std::vector<char> hit(B.n_objects, 0);
    for (int x = 0; x < A.n_objects; ++x) hit[phi.obj_map[x]] = 1;
    auto comps = components(B);
    for (const auto& c : comps) {
        bool ok = false;
        for (int y : c)
            if (hit[y]) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    // fully faithful: bijective on every hom-set
    std::vector<std::vector<int>> homA(A.n_objects * A.n_objects);
    for (int a = 0; a < A.n_arrows; ++a)
        homA[A.src[a] * A.n_objects + A.tgt[a]].push_back(a);
    std::vector<std::vector<int>> homB(B.n_objects * B.n_objects);
    for (int b = 0; b < B.n_arrows; ++b)
        homB[B.src[b] * B.n_objects + B.tgt[b]].push_back(b);
    for (int x = 0; x < A.n_objects; ++x)
        for (int y = 0; y < A.n_objects; ++y) {
            const auto& ha = homA[x * A.n_objects + y];
            const auto& hb = homB[phi.obj_map[x] * B.n_objects + phi.obj_map[y]];
            if (ha.size() != hb.size()) return false;
            std::vector<int> images;
            images.reserve(ha.size());
            for (int a : ha) images.push_back(phi.arrow_map[a]);
            std::sort(images.begin(), images.end());
            if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
        }
    return true;
}

MoritaResult morita_equivalent(const FiniteGroupoid& A, const FiniteGroupoid& B, int order_cap) {
    SkeletonResult sa = skeleton(A), sb = skeleton(B);
    MoritaResult out;
    if (sa.gpd.n_objects != sb.gpd.n_objects) {
        out.reason = "component counts differ: " + std::to_string(sa.gpd.n_objects) + " vs " +
                     std::to_string(sb.gpd.n_objects);
        return out;
    }
    const int n = sa.gpd.n_objects;
    std::vector<IsotropyGroup> ga(n), gb(n);
    for (int i = 0; i < n; ++i) {
        ga[i] = isotropy(sa.gpd, i);
        gb[i] = isotropy(sb.gpd, i);
    }
    // greedy matching inside isomorphism classes
    std::vector<int> match(n, -1);
    std::vector<char> used(n, 0);
    std::vector<std::vector<int>> isos(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (used[j] || gb[j].group.order() != ga[i].group.order()) continue;
            auto iso = find_isomorphism(ga[i].group, gb[j].group, order_cap);
            if (!iso.empty()) {
                match[i] = j;
                used[j] = 1;
                isos[i] = std::move(iso);
                break;
            }
        }
        if (match[i] < 0) {
            out.reason = "no matching component for isotropy group of order " +
                         std::to_string(ga[i].group.order());
            return out;
        }
    }
    out.equivalent = true;
    for (int i = 0; i < n; ++i) {
        MoritaMatch m;
        m.object_a = sa.object_in_parent[i];
        m.object_b = sb.object_in_parent[match[i]];
        m.group_iso = isos[i];
        out.matches.push_back(std::move(m));
    }
    return out;
}

QuotientResult quotient_by_normal_wide_subgroupoid(const FiniteGroupoid& G,
                                                   const std::vector<int>& kernel_arrows,
                                                   const std::string& where) {
    std::vector<char> in_k(G.n_arrows, 0);
    for (int a : kernel_arrows) {
        if (a < 0 || a >= G.n_arrows)
            throw AxiomViolation(where, "kernel arrows in range", std::to_string(a));
        in_k[a] = 1;
    }
    for (int a : kernel_arrows)
        if (G.src[a] != G.tgt[a])
            throw AxiomViolation(where, "totally intransitive (isotropy arrows only)",
                                 "arrow " + std::to_string(a));
    for (int x = 0; x < G.n_objects; ++x)
        if (!in_k[G.unit[x]])
            throw AxiomViolation(where, "wide (contains every unit)", "object " + std::to_string(x));
    for (int a : kernel_arrows) {
        if (!in_k[G.inv[a]])
            throw AxiomViolation(where, "closed under inverse", "arrow " + std::to_string(a));
        for (int b : kernel_arrows)
            if (G.composable(a, b) && !in_k[G.compose(a, b)])
                throw AxiomViolation(where, "closed under composition",
                                     std::to_string(a) + "∘" + std::to_string(b));
    }
    // normality: conjugates of kernel isotropy land in the kernel
    for (int a = 0; a < G.n_arrows; ++a)
        for (int k : kernel_arrows) {
            if (G.src[k] != G.src[a]) continue;
            int conj = G.compose(G.compose(a, k), G.inv[a]);
            if (!in_k[conj])
                throw AxiomViolation(where, "normal (closed under conjugation)",
                                     "arrow " + std::to_string(a) + " conjugating " +
                                         std::to_string(k));
        }

    // classes are the right cosets a∘K(src a); normality makes them two-sided
    QuotientResult out;
    out.arrow_class.assign(G.n_arrows, -1);
    std::vector<std::vector<int>> k_at(G.n_objects);
    for (int k : kernel_arrows) k_at[G.src[k]].push_back(k);
    for (int a = 0; a < G.n_arrows; ++a) {
        if (out.arrow_class[a] >= 0) continue;
        int cls = static_cast<int>(out.class_rep.size());
        int least = a;
        std::vector<int> members;
        for (int k : k_at[G.src[a]]) {
            int m = G.compose(a, k);
            members.push_back(m);
            least = std::min(least, m);
        }
        for (int m : members) out.arrow_class[m] = cls;
        out.class_rep.push_back(least);
    }
    FiniteGroupoid& q = out.gpd;
    q.n_objects = G.n_objects;
    q.n_arrows = static_cast<int>(out.class_rep.size());
    q.object_labels = G.object_labels;
    q.src.resize(q.n_arrows);
    q.tgt.resize(q.n_arrows);
    q.inv.resize(q.n_arrows);
    q.unit.resize(q.n_objects);
    for (int c = 0; c < q.n_arrows; ++c) {
        int rep = out.class_rep[c];
        q.src[c] = G.src[rep];
        q.tgt[c] = G.tgt[rep];
        q.inv[c] = out.arrow_class[G.inv[rep]];
        if (!G.arrow_labels.empty()) q.arrow_labels.push_back("[" + G.arrow_labels[rep] + "]");
    }
    for (int x = 0; x < q.n_objects; ++x) q.unit[x] = out.arrow_class[G.unit[x]];
    for (int fc = 0; fc < q.n_arrows; ++fc)
        for (int gc = 0; gc < q.n_arrows; ++gc)
            if (q.composable(gc, fc))
                q.set_compose(gc, fc,
                              out.arrow_class[G.compose(out.class_rep[gc], out.class_rep[fc])]);
    return out;
}

DisjointUnion disjoint_union(const std::vector<FiniteGroupoid>& parts) {
    DisjointUnion out;
    FiniteGroupoid& g = out.gpd;
    for (const auto& p : parts) {
        out.object_offset.push_back(g.n_objects);
        out.arrow_offset.push_back(g.n_arrows);
        for (int a = 0; a < p.n_arrows; ++a) {
            g.src.push_back(p.src[a] + g.n_objects);
            g.tgt.push_back(p.tgt[a] + g.n_objects);
            g.inv.push_back(p.inv[a] + g.n_arrows);
            g.arrow_labels.push_back(p.arrow_labels.empty() ? "a" + std::to_string(a)
                                                            : p.arrow_labels[a]);
        }
        for (int x = 0; x < p.n_objects; ++x) {
            g.unit.push_back(p.unit[x] + g.n_arrows);
            g.object_labels.push_back(p.object_labels.empty() ? "x" + std::to_string(x)
                                                              : p.object_labels[x]);
        }
        for (const auto& [k, gf] : p.comp) {
            int gg = static_cast<int>(k >> 32), ff = static_cast<int>(k & 0xffffffffu);
            g.set_compose(gg + g.n_arrows, ff + g.n_arrows, gf + g.n_arrows);
        }
        g.n_objects += p.n_objects;
        g.n_arrows += p.n_arrows;
    }
    return out;
}

}  // namespace orbisect
