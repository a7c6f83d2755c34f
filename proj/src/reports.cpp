#include "orbisect/reports.hpp"

#include <algorithm>

namespace orbisect {

using nlohmann::json;

json fg_abelian_to_json(const FGAbelianGroup& g) {
    json j;
    j["free_rank"] = g.free_rank;
    j["torsion"] = g.torsion;
    j["name"] = g.to_string();
    return j;
}

json group_descriptor(const FiniteGroup& G) {
    json j;
    j["order"] = G.order();
    j["abelian"] = G.is_abelian();
    j["order_profile"] = G.order_profile();
    j["abelianization"] = fg_abelian_to_json(abelianization(G));
    return j;
}

json sectors_report(const FiniteGroupoid& G, const SectorGroupoid& S) {
    json j;
    j["points"] = static_cast<int>(S.space.points.size());
    json strata = json::array();
    for (const auto& st : S.space.strata) {
        json e;
        e["label"] = st.label;
        e["group_order"] = st.rep.order();
        e["size"] = static_cast<int>(st.points.size());
        strata.push_back(std::move(e));
    }
    j["strata"] = std::move(strata);
    json classes = json::array();
    for (const auto& c : kawasaki_quotient(G, S)) {
        json e;
        e["base"] = G.object_labels[c.base];
        e["stratum"] = c.stratum_label;
        e["isotropy_order"] = static_cast<int>(c.isotropy_elems.size());
        e["size"] = c.size;
        classes.push_back(std::move(e));
    }
    j["classes"] = std::move(classes);
    return j;
}

json reduced_report(const SectorContext& ctx) {
    json j;
    const SectorSpace& space = ctx.tilde.space;
    json comps = json::array();
    for (const auto& comp : components(ctx.reduced.gpd)) {
        const int rep = comp.front();
        const SectorPoint& pt = space.points[rep];
        json e;
        e["rep_point"] = rep;
        e["base"] = ctx.base.object_labels[pt.base];
        e["stratum"] = space.strata[space.stratum_of[rep]].label;
        e["size"] = static_cast<int>(comp.size());
        e["isotropy"] = group_descriptor(isotropy(ctx.reduced.gpd, rep).group);
        comps.push_back(std::move(e));
    }
    j["components"] = std::move(comps);
    return j;
}

json morita_report(const FiniteGroupoid& A, const FiniteGroupoid& B, const MoritaResult& res) {
    json j;
    j["equivalent"] = res.equivalent;
    if (!res.equivalent) {
        j["reason"] = res.reason;
        return j;
    }
    json matches = json::array();
    for (const auto& m : res.matches) {
        json e;
        e["object_first"] = A.object_labels[m.object_a];
        e["object_second"] = B.object_labels[m.object_b];
        const IsotropyGroup ga = isotropy(A, m.object_a);
        const IsotropyGroup gb = isotropy(B, m.object_b);
        e["isotropy_order"] = ga.group.order();
        json iso = json::array();
        for (int i = 0; i < ga.group.order(); ++i)
            iso.push_back(ga.group.label(i) + " -> " + gb.group.label(m.group_iso[i]));
        e["isomorphism"] = std::move(iso);
        matches.push_back(std::move(e));
    }
    j["matches"] = std::move(matches);
    return j;
}

json stable_report(const StableResult& res) {
    json j;
    j["degree"] = res.degree;
    j["group"] = fg_abelian_to_json(res.group);
    json comps = json::array();
    for (const auto& c : res.components) {
        json e;
        e["rep_object"] = c.rep_object;
        if (!c.label.empty()) e["stratum"] = c.label;
        e["isotropy_order"] = c.isotropy_order;
        e["h1"] = fg_abelian_to_json(c.h1);
        e["summand"] = fg_abelian_to_json(c.summand);
        comps.push_back(std::move(e));
    }
    j["components"] = std::move(comps);
    return j;
}

json tomdieck_report(const FiniteGroup& G, const TomDieckResult& res) {
    json j;
    j["degree"] = res.degree;
    j["assembled"] = fg_abelian_to_json(res.assembled);
    j["independent_rank"] = res.independent_rank;
    j["rank_matches"] = res.rank_matches;
    json parts = json::array();
    for (const auto& s : res.summands) {
        json e;
        json elems = json::array();
        for (int g : s.class_rep.elems) elems.push_back(G.label(g));
        e["subgroup"] = std::move(elems);
        e["weyl_order"] = s.weyl_order;
        e["fixed_points"] = s.fixed_count;
        e["components"] = s.component_count;
        e["group"] = fg_abelian_to_json(s.group);
        parts.push_back(std::move(e));
    }
    j["summands"] = std::move(parts);
    return j;
}

json invariance_report(const InvarianceReport& rep) {
    json j;
    j["morita"] = rep.morita;
    if (!rep.morita) j["reason"] = rep.morita_reason;
    json degrees = json::array();
    for (const auto& d : rep.degrees) {
        json e;
        e["degree"] = d.degree;
        e["equivariant_first"] = fg_abelian_to_json(d.equivariant_first);
        e["equivariant_second"] = fg_abelian_to_json(d.equivariant_second);
        e["sector_first"] = fg_abelian_to_json(d.sector_first);
        e["sector_second"] = fg_abelian_to_json(d.sector_second);
        e["all_equal"] = d.all_equal;
        degrees.push_back(std::move(e));
    }
    j["degrees"] = std::move(degrees);
    j["verified"] = rep.verified;
    return j;
}

json orbit_diagram_report(const FiniteGroupoid& G, const SectorContext& ctx,
                          const OrbitDiagram& d) {
    json j;
    j["base"] = G.object_labels[d.base_object];
    json classes = json::array();
    for (std::size_t i = 0; i < d.classes.size(); ++i) {
        json e;
        e["index"] = static_cast<int>(i);
        json rep = json::array();
        for (int g : d.classes[i].front().elems) rep.push_back(d.iso.group.label(g));
        e["representative"] = std::move(rep);
        e["order"] = d.classes[i].front().order();
        e["class_size"] = static_cast<int>(d.classes[i].size());
        classes.push_back(std::move(e));
    }
    j["classes"] = std::move(classes);
    json edges = json::array();
    const SectorSpace& space = ctx.tilde.space;
    for (const auto& e : d.edges) {
        json o;
        o["from"] = e.from;
        o["to"] = e.to;
        o["conjugator"] = d.iso.group.label(e.conj);
        o["domain_points"] = e.domain_points;
        o["point_map"] = e.point_map;
        o["image_stratum"] =
            e.point_map.empty()
                ? std::string()
                : space.strata[space.stratum_of[e.point_map.front()]].label;
        edges.push_back(std::move(o));
    }
    j["edges"] = std::move(edges);
    return j;
}

namespace {

bool scalar_only(const json& arr) {
    return std::all_of(arr.begin(), arr.end(), [](const json& v) { return v.is_primitive(); });
}

void render_into(const json& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (j.is_object()) {
        for (const auto& item : j.items()) {
            const json& v = item.value();
            if (v.is_primitive()) {
                out += pad + item.key() + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) +
                       "\n";
            } else if (v.is_array() && scalar_only(v)) {
                out += pad + item.key() + ": " + v.dump() + "\n";
            } else {
                out += pad + item.key() + ":\n";
                render_into(v, out, depth + 1);
            }
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            const json& v = j[i];
            if (v.is_primitive() || (v.is_array() && scalar_only(v))) {
                out += pad + "- " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
            } else {
                out += pad + "- #" + std::to_string(i) + "\n";
                render_into(v, out, depth + 1);
            }
        }
    } else {
        out += pad + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
    }
}

}  // namespace

std::string text_render(const json& j) {
    std::string out;
    render_into(j, out, 0);
    return out;
}

}  // namespace orbisect
