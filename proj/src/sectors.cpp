#include "orbisect/sectors.hpp"

#include <algorithm>
#include <numeric>

#include "orbisect/errors.hpp"

namespace orbisect {

namespace {

/// subgroup of the isotropy group -> sorted global arrow indices
std::vector<int> subgroup_arrows(const IsotropyGroup& iso, const Subgroup& s) {
    std::vector<int> out;
    out.reserve(s.elems.size());
    for (int e : s.elems) out.push_back(iso.arrow_of_elem[e]);
    std::sort(out.begin(), out.end());
    return out;
}

std::string point_label(const FiniteGroupoid& G, const SectorPoint& p) {
    std::string base = G.object_labels.empty() ? "x" + std::to_string(p.base)
                                               : G.object_labels[p.base];
    return "(" + base + ",|H|=" + std::to_string(p.arrows.size()) + ")";
}

}  // namespace

bigint factorial(int n) {
    bigint f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

int SectorSpace::point_index(int base, const std::vector<int>& sorted_arrows) const {
    auto it = index_.find({base, sorted_arrows});
    return it == index_.end() ? -1 : it->second;
}

std::vector<KTuple> k_sectors(const FiniteGroupoid& G, int k, long budget) {
    if (k < 1) throw std::invalid_argument("k_sectors: k must be >= 1");
    bigint total = 0;
    std::vector<std::vector<int>> iso_arrows(G.n_objects);
    for (int a = 0; a < G.n_arrows; ++a)
        if (G.src[a] == G.tgt[a]) iso_arrows[G.src[a]].push_back(a);
    for (int x = 0; x < G.n_objects; ++x) {
        bigint m = iso_arrows[x].size();
        bigint pw = 1;
        for (int i = 0; i < k; ++i) pw *= m;
        total += pw;
    }
    if (total > budget) throw SizeBudgetExceeded(budget, "sector enumeration too large");
    std::vector<KTuple> out;
    out.reserve(static_cast<std::size_t>(total));
    for (int x = 0; x < G.n_objects; ++x) {
        const auto& A = iso_arrows[x];
        if (A.empty()) continue;
        std::vector<int> idx(k, 0);
        while (true) {
            KTuple t;
            t.arrows.reserve(k);
            for (int i : idx) t.arrows.push_back(A[i]);
            out.push_back(std::move(t));
            int pos = k - 1;
            while (pos >= 0 && idx[pos] + 1 == static_cast<int>(A.size())) idx[pos--] = 0;
            if (pos < 0) break;
            ++idx[pos];
        }
    }
    return out;
}

bigint p_h_count(const FiniteGroupoid& G, const FiniteGroup& H, int order_cap) {
    if (H.order() > order_cap) throw OrderCapExceeded(H.order(), order_cap);
    bigint subgroup_hits = 0;
    for (int x = 0; x < G.n_objects; ++x) {
        IsotropyGroup iso = isotropy(G, x);
        if (iso.group.order() > order_cap) throw OrderCapExceeded(iso.group.order(), order_cap);
        if (iso.group.order() % H.order() != 0) continue;
        for (const auto& s : all_subgroups(iso.group)) {
            if (s.order() != H.order()) continue;
            if (are_isomorphic(subgroup_as_group(iso.group, s).group, H, order_cap))
                ++subgroup_hits;
        }
    }
    return subgroup_hits * factorial(H.order());
}

std::vector<KTuple> p_h(const FiniteGroupoid& G, const FiniteGroup& H, int order_cap, long budget) {
    bigint total = p_h_count(G, H, order_cap);
    if (total > budget) throw SizeBudgetExceeded(budget, "sector enumeration too large");
    std::vector<KTuple> out;
    out.reserve(static_cast<std::size_t>(total));
    for (int x = 0; x < G.n_objects; ++x) {
        IsotropyGroup iso = isotropy(G, x);
        if (iso.group.order() % H.order() != 0) continue;
        for (const auto& s : all_subgroups(iso.group)) {
            if (s.order() != H.order()) continue;
            if (!are_isomorphic(subgroup_as_group(iso.group, s).group, H, order_cap)) continue;
            std::vector<int> arrows = subgroup_arrows(iso, s);  // sorted: least permutation
            do {
                out.push_back(KTuple{arrows});
            } while (std::next_permutation(arrows.begin(), arrows.end()));
        }
    }
    return out;
}

SectorSpace sector_space(const FiniteGroupoid& G, int order_cap) {
    SectorSpace out;
    struct Raw {
        SectorPoint pt;
        int stratum;
    };
    std::vector<Raw> raw;
    struct ProtoStratum {
        FiniteGroup rep;
        int first_seen;
    };
    std::vector<ProtoStratum> protos;

    for (int x = 0; x < G.n_objects; ++x) {
        IsotropyGroup iso = isotropy(G, x);
        if (iso.group.order() > order_cap) throw OrderCapExceeded(iso.group.order(), order_cap);
        for (const auto& s : all_subgroups(iso.group)) {
            FiniteGroup sub = subgroup_as_group(iso.group, s).group;
            int stratum = -1;
            for (std::size_t t = 0; t < protos.size(); ++t)
                if (protos[t].rep.order() == sub.order() &&
                    are_isomorphic(protos[t].rep, sub, order_cap)) {
                    stratum = static_cast<int>(t);
                    break;
                }
            if (stratum < 0) {
                stratum = static_cast<int>(protos.size());
                protos.push_back({sub, stratum});
            }
            raw.push_back({SectorPoint{x, subgroup_arrows(iso, s)}, stratum});
        }
    }

    // strata ordered by (group order, first seen); points grouped by stratum
    std::vector<int> stratum_order(protos.size());
    std::iota(stratum_order.begin(), stratum_order.end(), 0);
    std::sort(stratum_order.begin(), stratum_order.end(), [&](int a, int b) {
        if (protos[a].rep.order() != protos[b].rep.order())
            return protos[a].rep.order() < protos[b].rep.order();
        return protos[a].first_seen < protos[b].first_seen;
    });
    std::vector<int> new_stratum(protos.size());
    for (std::size_t i = 0; i < stratum_order.size(); ++i) new_stratum[stratum_order[i]] = static_cast<int>(i);

    out.strata.resize(protos.size());
    int last_order = -1, seq = 0;
    for (std::size_t i = 0; i < stratum_order.size(); ++i) {
        const auto& p = protos[stratum_order[i]];
        seq = p.rep.order() == last_order ? seq + 1 : 1;
        last_order = p.rep.order();
        out.strata[i].rep = p.rep;
        out.strata[i].label = "H" + std::to_string(p.rep.order()) + "." + std::to_string(seq);
    }

    std::stable_sort(raw.begin(), raw.end(), [&](const Raw& a, const Raw& b) {
        return new_stratum[a.stratum] < new_stratum[b.stratum];
    });
    for (const auto& r : raw) {
        int idx = static_cast<int>(out.points.size());
        out.stratum_of.push_back(new_stratum[r.stratum]);
        out.strata[new_stratum[r.stratum]].points.push_back(idx);
        out.index_[{r.pt.base, r.pt.arrows}] = idx;
        out.points.push_back(r.pt);
    }

    GroupoidAction& act = out.action;
    act.carrier = static_cast<int>(out.points.size());
    act.anchor.resize(act.carrier);
    act.point_labels.resize(act.carrier);
    for (int p = 0; p < act.carrier; ++p) {
        act.anchor[p] = out.points[p].base;
        act.point_labels[p] = point_label(G, out.points[p]);
    }
    for (int p = 0; p < act.carrier; ++p) {
        int x = out.points[p].base;
        for (int a = 0; a < G.n_arrows; ++a) {
            if (G.src[a] != x) continue;
            std::vector<int> conj;
            conj.reserve(out.points[p].arrows.size());
            for (int k : out.points[p].arrows) conj.push_back(G.compose(G.compose(a, k), G.inv[a]));
            std::sort(conj.begin(), conj.end());
            int q = out.point_index(G.tgt[a], conj);
            if (q < 0)
                throw AxiomViolation("sector space", "conjugate of a subgroup is a sector point",
                                     "arrow " + std::to_string(a));
            act.set_act(a, p, q);
        }
    }
    return out;
}

SectorGroupoid sector_groupoid(const FiniteGroupoid& G, int order_cap) {
    SectorGroupoid out;
    out.space = sector_space(G, order_cap);
    out.ag = action_groupoid(G, out.space.action);
    out.embedding.obj_map.resize(G.n_objects);
    out.embedding.arrow_map.resize(G.n_arrows);
    for (int x = 0; x < G.n_objects; ++x) {
        int p = out.space.point_index(x, {G.unit[x]});
        if (p < 0) throw AxiomViolation("sector groupoid", "trivial sector exists", std::to_string(x));
        out.embedding.obj_map[x] = p;
    }
    for (int a = 0; a < G.n_arrows; ++a)
        out.embedding.arrow_map[a] = out.ag.arrow_of(a, out.embedding.obj_map[G.src[a]]);
    return out;
}

std::vector<int> kernel_arrows(const FiniteGroupoid& G, const SectorGroupoid& S) {
    (void)G;
    std::vector<int> out;
    for (int i = 0; i < S.ag.gpd.n_arrows; ++i) {
        auto [a, p] = S.ag.arrow_pair[i];
        const auto& arrows = S.space.points[p].arrows;
        if (std::binary_search(arrows.begin(), arrows.end(), a)) out.push_back(i);
    }
    return out;
}

SectorContext build_sectors(const FiniteGroupoid& G, int order_cap) {
    SectorContext ctx;
    ctx.base = G;
    ctx.tilde = sector_groupoid(G, order_cap);
    ctx.reduced = quotient_by_normal_wide_subgroupoid(
        ctx.tilde.ag.gpd, kernel_arrows(G, ctx.tilde), "reduced sectors");
    return ctx;
}

SectorHomResult induced_sector_hom(const SectorContext& A, const SectorContext& B,
                                   const GroupoidHom& phi) {
    validate_hom(A.base, B.base, phi, "sector functoriality");
    if (!is_faithful(A.base, B.base, phi)) throw Unfaithful("sector functoriality requires a faithful homomorphism");
    SectorHomResult out;
    const int npts = static_cast<int>(A.tilde.space.points.size());
    out.point_map.resize(npts);
    for (int p = 0; p < npts; ++p) {
        const SectorPoint& pt = A.tilde.space.points[p];
        std::vector<int> image;
        image.reserve(pt.arrows.size());
        for (int k : pt.arrows) image.push_back(phi.arrow_map[k]);
        std::sort(image.begin(), image.end());
        int q = B.tilde.space.point_index(phi.obj_map[pt.base], image);
        if (q < 0)
            throw AxiomViolation("sector functoriality", "image of a sector point is a sector point",
                                 "point " + std::to_string(p));
        out.point_map[p] = q;
    }
    out.tilde.obj_map = out.point_map;
    out.tilde.arrow_map.resize(A.tilde.ag.gpd.n_arrows);
    for (int i = 0; i < A.tilde.ag.gpd.n_arrows; ++i) {
        auto [a, p] = A.tilde.ag.arrow_pair[i];
        out.tilde.arrow_map[i] = B.tilde.ag.arrow_of(phi.arrow_map[a], out.point_map[p]);
    }
    out.bar.obj_map = out.point_map;  // quotient keeps objects
    out.bar.arrow_map.resize(A.reduced.gpd.n_arrows);
    for (int c = 0; c < A.reduced.gpd.n_arrows; ++c)
        out.bar.arrow_map[c] = B.reduced.arrow_class[out.tilde.arrow_map[A.reduced.class_rep[c]]];
    return out;
}

bool check_naturality(const SectorContext& A, const SectorContext& B, const GroupoidHom& phi) {
    if (!is_weak_equivalence(A.base, B.base, phi)) return false;
    PullbackAction P = pullback_action(A.base, B.base, phi, B.tilde.space.action);
    const int n = static_cast<int>(A.tilde.space.points.size());
    if (P.action.carrier != n) return false;

    // forward: (x,K) -> ((φx, φK), x)
    std::vector<int> fwd(n);
    for (int p = 0; p < n; ++p) {
        const SectorPoint& pt = A.tilde.space.points[p];
        std::vector<int> image;
        image.reserve(pt.arrows.size());
        for (int k : pt.arrows) image.push_back(phi.arrow_map[k]);
        std::sort(image.begin(), image.end());
        int q = B.tilde.space.point_index(phi.obj_map[pt.base], image);
        if (q < 0) return false;
        auto it = P.point_at.find(GroupoidAction::key(q, pt.base));
        if (it == P.point_at.end()) return false;
        fwd[p] = it->second;
    }

    // backward: ((y,L), x) -> (x, unique hom-set preimage of L)
    std::vector<int> bwd(n);
    for (int pp = 0; pp < n; ++pp) {
        auto [q, x] = P.point_pair[pp];
        const SectorPoint& qt = B.tilde.space.points[q];
        std::vector<int> pre;
        pre.reserve(qt.arrows.size());
        for (int l : qt.arrows) {
            int found = -1;
            for (int a = 0; a < A.base.n_arrows; ++a) {
                if (A.base.src[a] != x || A.base.tgt[a] != x) continue;
                if (phi.arrow_map[a] == l) {
                    if (found >= 0) return false;  // not injective on the hom-set
                    found = a;
                }
            }
            if (found < 0) return false;  // not surjective on the hom-set
            pre.push_back(found);
        }
        std::sort(pre.begin(), pre.end());
        int p = A.tilde.space.point_index(x, pre);
        if (p < 0) return false;
        bwd[pp] = p;
    }

    for (int p = 0; p < n; ++p)
        if (bwd[fwd[p]] != p || fwd[bwd[p]] != p) return false;
    return is_equivariant_bijection(A.base, A.tilde.space.action, P.action, fwd);
}

std::vector<std::vector<int>> local_components(const SectorGroupoid& S) {
    return components(S.ag.gpd);
}

std::vector<KawasakiClass> kawasaki_quotient(const FiniteGroupoid& G, const SectorGroupoid& S) {
    std::vector<KawasakiClass> out;
    std::map<int, IsotropyGroup> iso_cache;
    for (const auto& comp : local_components(S)) {
        KawasakiClass k;
        k.rep_point = comp.front();
        k.size = static_cast<int>(comp.size());
        const SectorPoint& pt = S.space.points[k.rep_point];
        k.base = pt.base;
        auto it = iso_cache.find(pt.base);
        if (it == iso_cache.end()) it = iso_cache.emplace(pt.base, isotropy(G, pt.base)).first;
        for (int a : pt.arrows) k.isotropy_elems.push_back(it->second.elem_of_arrow[a]);
        std::sort(k.isotropy_elems.begin(), k.isotropy_elems.end());
        k.stratum_label = S.space.strata[S.space.stratum_of[k.rep_point]].label;
        out.push_back(std::move(k));
    }
    return out;
}

bool equal_mod_local_conjugation(const FiniteGroupoid& G, const SectorContext& ctx,
                                 const std::vector<int>& domain,
                                 const std::vector<int>& map1, const std::vector<int>& map2) {
    if (map1.size() != domain.size() || map2.size() != domain.size()) return false;
    for (std::size_t i = 0; i < domain.size(); ++i) {
        const SectorPoint& p1 = ctx.tilde.space.points[map1[i]];
        const SectorPoint& p2 = ctx.tilde.space.points[map2[i]];
        if (p1.base != p2.base) return false;
        if (p1.arrows.size() != p2.arrows.size()) return false;
        bool conjugate = false;
        for (int c = 0; c < G.n_arrows && !conjugate; ++c) {
            if (G.src[c] != p1.base || G.tgt[c] != p1.base) continue;
            std::vector<int> conj;
            conj.reserve(p1.arrows.size());
            for (int k : p1.arrows) conj.push_back(G.compose(G.compose(c, k), G.inv[c]));
            std::sort(conj.begin(), conj.end());
            conjugate = conj == p2.arrows;
        }
        if (!conjugate) return false;
    }
    return true;
}

OrbitDiagram orbit_category_diagram(const FiniteGroupoid& G, const SectorContext& ctx, int x) {
    if (x < 0 || x >= G.n_objects)
        throw AxiomViolation("orbit diagram", "base object exists", std::to_string(x));
    OrbitDiagram out;
    out.base_object = x;
    out.iso = isotropy(G, x);
    out.classes = conjugacy_classes_of_subgroups(out.iso.group);

    auto subconjugator = [&](const Subgroup& H, const Subgroup& K) -> int {
        // least g in the isotropy group with gHg⁻¹ ≤ K, or -1
        for (int g = 0; g < out.iso.group.order(); ++g) {
            bool inside = true;
            for (int h : H.elems) {
                int c = out.iso.group.mul(out.iso.group.mul(g, h), out.iso.group.inv(g));
                if (!std::binary_search(K.elems.begin(), K.elems.end(), c)) {
                    inside = false;
                    break;
                }
            }
            if (inside) return g;
        }
        return -1;
    };

    // witness arrows to every point of a component of the sector groupoid
    const auto& tilde = ctx.tilde;
    auto component_witnesses = [&](int start_point, std::vector<int>& pts, std::vector<int>& wit) {
        std::vector<int> warrow(tilde.space.points.size(), -1);
        warrow[start_point] = G.unit[tilde.space.points[start_point].base];
        std::vector<int> queue = {start_point};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int p = queue[qi];
            for (int i = 0; i < tilde.ag.gpd.n_arrows; ++i) {
                if (tilde.ag.gpd.src[i] != p) continue;
                int p2 = tilde.ag.gpd.tgt[i];
                if (warrow[p2] >= 0) continue;
                warrow[p2] = G.compose(tilde.ag.arrow_pair[i].first, warrow[p]);
                queue.push_back(p2);
            }
        }
        std::sort(queue.begin(), queue.end());
        pts = queue;
        wit.clear();
        for (int p : pts) wit.push_back(warrow[p]);
    };

    for (std::size_t i = 0; i < out.classes.size(); ++i)
        for (std::size_t j = 0; j < out.classes.size(); ++j) {
            const Subgroup& H = out.classes[i].front();
            const Subgroup& K = out.classes[j].front();
            if (H.order() > K.order()) continue;
            int g = subconjugator(H, K);
            if (g < 0) continue;
            OrbitDiagram::Edge e;
            e.from = static_cast<int>(i);
            e.to = static_cast<int>(j);
            e.conj = g;
            // C = gHg⁻¹ as a global arrow set
            Subgroup C = conjugate_subgroup(out.iso.group, g, H);
            std::vector<int> c_arrows = subgroup_arrows(out.iso, C);
            int pK = tilde.space.point_index(x, subgroup_arrows(out.iso, K));
            std::vector<int> wit;
            component_witnesses(pK, e.domain_points, wit);
            for (std::size_t t = 0; t < e.domain_points.size(); ++t) {
                int w = wit[t];  // arrow x -> base of the domain point
                std::vector<int> conj;
                conj.reserve(c_arrows.size());
                for (int k : c_arrows) conj.push_back(G.compose(G.compose(w, k), G.inv[w]));
                std::sort(conj.begin(), conj.end());
                int img = tilde.space.point_index(G.tgt[w], conj);
                if (img < 0)
                    throw AxiomViolation("orbit diagram", "transported subgroup is a sector point",
                                         std::to_string(e.domain_points[t]));
                e.point_map.push_back(img);
            }
            out.edges.push_back(std::move(e));
        }
    return out;
}

}  // namespace orbisect
