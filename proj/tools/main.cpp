#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "orbisect/errors.hpp"
#include "orbisect/homology.hpp"
#include "orbisect/invariants.hpp"
#include "orbisect/io.hpp"
#include "orbisect/reports.hpp"
#include "orbisect/sectors.hpp"

using nlohmann::json;
using namespace orbisect;

namespace {

struct Options {
    std::string input;
    bool text = false;
    int order_cap = kDefaultOrderCap;
    long simplex_budget = kDefaultSimplexBudget;
    unsigned seed = 0;  // reserved for randomized generation commands
};

using ParamMap = std::map<std::string, std::string>;

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(what, "'" + s + "' is not an integer");
    }
}

const std::string& require_param(const ParamMap& p, const std::string& key,
                                 const std::string& cmd) {
    const auto it = p.find(key);
    if (it == p.end()) throw ParseError(cmd, "missing required parameter '" + key + "'");
    return it->second;
}

const NamedGroupoid& pick_groupoid(const InputDocument& doc, const ParamMap& p,
                                   const std::string& key = "groupoid") {
    const auto it = p.find(key);
    if (it != p.end()) {
        const NamedGroupoid* g = doc.find_groupoid(it->second);
        if (!g) throw ParseError(key, "no groupoid named '" + it->second + "'");
        return *g;
    }
    if (doc.groupoids.size() == 1) return doc.groupoids.front();
    throw ParseError(key, doc.groupoids.empty()
                              ? "the document defines no groupoid"
                              : "the document defines several groupoids; pass --" + key);
}

int resolve_object(const FiniteGroupoid& G, const std::string& s) {
    for (int x = 0; x < G.n_objects; ++x)
        if (G.object_labels[x] == s) return x;
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
        const int x = std::stoi(s);
        if (x < G.n_objects) return x;
    }
    throw ParseError("base", "'" + s + "' names no object");
}

/// "trivial" or a comma-separated list of isotropy generators, each an
/// element label of the isotropy group or an element index.
Subgroup resolve_subgroup(const IsotropyGroup& iso, const std::string& spec) {
    if (spec.empty() || spec == "trivial") return Subgroup{{iso.group.identity()}};
    std::vector<int> gens;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int found = -1;
        for (int i = 0; i < iso.group.order() && found < 0; ++i)
            if (iso.group.label(i) == item) found = i;
        if (found < 0 && !item.empty() &&
            item.find_first_not_of("0123456789") == std::string::npos) {
            const int i = std::stoi(item);
            if (i < iso.group.order()) found = i;
        }
        if (found < 0)
            throw ParseError("group", "'" + item + "' names no isotropy element");
        gens.push_back(found);
    }
    return generated_subgroup(iso.group, gens);
}

json envelope(const std::string& cmd, const ParamMap& p, json result) {
    json out;
    out["command"] = cmd;
    json params = json::object();
    for (const auto& [k, v] : p) params[k] = v;
    out["parameters"] = std::move(params);
    out["result"] = std::move(result);
    return out;
}

// Runs one command against the document. Sets `verify_exit` to 4 when an
// invariance check that should hold fails.
json dispatch(const std::string& cmd, const InputDocument& doc, const Options& opt, ParamMap p,
              int& verify_exit) {
    if (cmd == "sectors") {
        const NamedGroupoid& g = pick_groupoid(doc, p);
        p["groupoid"] = g.name;
        const SectorGroupoid S = sector_groupoid(g.gpd, opt.order_cap);
        return envelope(cmd, p, sectors_report(g.gpd, S));
    }
    if (cmd == "reduced") {
        const NamedGroupoid& g = pick_groupoid(doc, p);
        p["groupoid"] = g.name;
        const SectorContext ctx = build_sectors(g.gpd, opt.order_cap);
        return envelope(cmd, p, reduced_report(ctx));
    }
    if (cmd == "morita") {
        const NamedGroupoid& a = pick_groupoid(doc, p, "first");
        const NamedGroupoid& b = pick_groupoid(doc, p, "second");
        p["first"] = a.name;
        p["second"] = b.name;
        return envelope(cmd, p, morita_report(a.gpd, b.gpd,
                                              morita_equivalent(a.gpd, b.gpd, opt.order_cap)));
    }
    if (cmd == "homology") {
        const NamedGroupoid& g = pick_groupoid(doc, p);
        p["groupoid"] = g.name;
        const int n = to_int(require_param(p, "degree", cmd), "degree");
        json payload;
        payload["degree"] = n;
        payload["group"] = fg_abelian_to_json(homology(g.gpd, n, opt.simplex_budget));
        return envelope(cmd, p, payload);
    }
    if (cmd == "pi") {
        const NamedGroupoid& g = pick_groupoid(doc, p);
        p["groupoid"] = g.name;
        const int x = resolve_object(g.gpd, require_param(p, "base", cmd));
        const int n = to_int(require_param(p, "n", cmd), "n");
        json payload;
        payload["base"] = g.gpd.object_labels[x];
        payload["n"] = n;
        payload["group"] = group_descriptor(pi_orb(g.gpd, x, n));
        return envelope(cmd, p, payload);
    }
    if (cmd == "extended-pi") {
        const NamedGroupoid& g = pick_groupoid(doc, p);
        p["groupoid"] = g.name;
        const int x = resolve_object(g.gpd, require_param(p, "base", cmd));
        const int n = to_int(require_param(p, "n", cmd), "n");
        const std::string spec = p.count("group") ? p.at("group") : std::string("trivial");
        const SectorContext ctx = build_sectors(g.gpd, opt.order_cap);
        const IsotropyGroup iso = isotropy(g.gpd, x);
        const Subgroup H = resolve_subgroup(iso, spec);
        std::vector<int> arrows;
        for (int h : H.elems) arrows.push_back(iso.arrow_of_elem[h]);
        std::sort(arrows.begin(), arrows.end());
        const int point = ctx.tilde.space.point_index(x, arrows);
        if (point < 0) throw std::logic_error("sector point lookup failed");
        json payload;
        payload["base"] = g.gpd.object_labels[x];
        payload["n"] = n;
        payload["point"] = point;
        payload["stratum"] = ctx.tilde.space.strata[ctx.tilde.space.stratum_of[point]].label;
        json elems = json::array();
        for (int h : H.elems) elems.push_back(iso.group.label(h));
        payload["subgroup"] = std::move(elems);
        payload["group"] = group_descriptor(extended_pi(ctx, point, n));
        return envelope(cmd, p, payload);
    }
    if (cmd == "stable") {
        const NamedGroupoid& g = pick_groupoid(doc, p);
        p["groupoid"] = g.name;
        const int n = to_int(require_param(p, "n", cmd), "n");
        const bool unreduced = p.count("unreduced") && p.at("unreduced") == "true";
        const SectorContext ctx = build_sectors(g.gpd, opt.order_cap);
        const StableResult res = unreduced ? stable_pi_orb_unreduced(ctx, n)
                                           : stable_pi_orb(ctx, n);
        return envelope(cmd, p, stable_report(res));
    }
    if (cmd == "tomdieck") {
        const std::string gname = require_param(p, "group", cmd);
        const std::string aname = require_param(p, "action", cmd);
        const NamedGroup* g = doc.find_group(gname);
        if (!g) throw ParseError("group", "no group named '" + gname + "'");
        const NamedAction* a = doc.find_action(aname);
        if (!a) throw ParseError("action", "no action named '" + aname + "'");
        if (a->group != gname)
            throw ParseError("action",
                             "action '" + aname + "' acts for group '" + a->group + "'");
        const int n = to_int(require_param(p, "n", cmd), "n");
        return envelope(cmd, p,
                        tomdieck_report(g->group,
                                        equivariant_stable_pi(g->group, a->action, n,
                                                              opt.order_cap)));
    }
    if (cmd == "verify-invariance") {
        const NamedGroupoid& a = pick_groupoid(doc, p, "first");
        const NamedGroupoid& b = pick_groupoid(doc, p, "second");
        p["first"] = a.name;
        p["second"] = b.name;
        for (const NamedGroupoid* g : {&a, &b})
            if (g->form != GroupoidForm::Translation)
                throw ParseError(g->name, "verify-invariance needs translation groupoids");
        const InvarianceReport rep = verify_presentation_independence(
            doc.find_group(a.group_ref)->group, doc.find_action(a.action_ref)->action,
            doc.find_group(b.group_ref)->group, doc.find_action(b.action_ref)->action,
            opt.order_cap);
        if (!rep.verified) verify_exit = 4;
        return envelope(cmd, p, invariance_report(rep));
    }
    if (cmd == "orbit-diagram") {
        const NamedGroupoid& g = pick_groupoid(doc, p);
        p["groupoid"] = g.name;
        const int x = resolve_object(g.gpd, require_param(p, "base", cmd));
        const SectorContext ctx = build_sectors(g.gpd, opt.order_cap);
        return envelope(cmd, p,
                        orbit_diagram_report(g.gpd, ctx,
                                             orbit_category_diagram(g.gpd, ctx, x)));
    }
    throw ParseError(cmd, "unknown command");
}

void emit(const json& out, const Options& opt) {
    if (opt.text)
        std::cout << text_render(out);
    else
        std::cout << out.dump(2) << "\n";
}

InputDocument load_document(const Options& opt) {
    if (opt.input.empty()) throw ParseError("--input", "an input document is required");
    std::ifstream in(opt.input);
    if (!in) throw ParseError(opt.input, "cannot read input file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), opt.order_cap);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed-point sectors and stable invariants of finite groupoids"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--input", opt.input, "input document (JSON)");
    bool as_json = false;
    auto* jopt = app.add_flag("--json", as_json, "machine-readable output (default)");
    auto* topt = app.add_flag("--text", opt.text, "plain-text output");
    jopt->excludes(topt);
    topt->excludes(jopt);
    app.add_option("--order-cap", opt.order_cap, "largest allowed group order")
        ->capture_default_str();
    app.add_option("--simplex-budget", opt.simplex_budget, "largest allowed nerve size")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized generation (reserved)");

    // per-command parameters, collected into one pool
    std::string groupoid, base, subgroup_spec, group_name, action_name, first, second;
    int degree = -1, n = -1;
    bool unreduced = false;

    auto add_groupoid = [&](CLI::App* c) {
        c->add_option("--groupoid", groupoid, "groupoid name (optional if unique)");
    };
    CLI::App* c_validate = app.add_subcommand("validate", "parse and check the document");
    CLI::App* c_sectors = app.add_subcommand("sectors", "sector strata and orbit classes");
    add_groupoid(c_sectors);
    CLI::App* c_reduced = app.add_subcommand("reduced", "reduced sector components");
    add_groupoid(c_reduced);
    CLI::App* c_morita = app.add_subcommand("morita", "Morita comparison of two groupoids");
    c_morita->add_option("first", first, "first groupoid")->required();
    c_morita->add_option("second", second, "second groupoid")->required();
    CLI::App* c_homology = app.add_subcommand("homology", "classifying-space homology");
    add_groupoid(c_homology);
    c_homology->add_option("--degree", degree, "homology degree")->required();
    CLI::App* c_pi = app.add_subcommand("pi", "homotopy of the classifying space");
    add_groupoid(c_pi);
    c_pi->add_option("--base", base, "base object (label or index)")->required();
    c_pi->add_option("--n", n, "degree")->required();
    CLI::App* c_epi = app.add_subcommand("extended-pi", "homotopy at a sector point");
    add_groupoid(c_epi);
    c_epi->add_option("--base", base, "base object (label or index)")->required();
    c_epi->add_option("--group", subgroup_spec,
                      "isotropy generators, comma-separated (default: trivial)");
    c_epi->add_option("--n", n, "degree")->required();
    CLI::App* c_stable = app.add_subcommand("stable", "stable invariant of the sectors");
    add_groupoid(c_stable);
    c_stable->add_option("--n", n, "degree (0 or 1)")->required();
    c_stable->add_flag("--unreduced", unreduced, "use the unreduced sector groupoid");
    CLI::App* c_td = app.add_subcommand("tomdieck", "equivariant stable assembly");
    c_td->add_option("--group", group_name, "group name")->required();
    c_td->add_option("--action", action_name, "action name")->required();
    c_td->add_option("--n", n, "degree (0 or 1)")->required();
    CLI::App* c_verify =
        app.add_subcommand("verify-invariance", "compare two translation presentations");
    c_verify->add_option("first", first, "first translation groupoid")->required();
    c_verify->add_option("second", second, "second translation groupoid")->required();
    CLI::App* c_orbit = app.add_subcommand("orbit-diagram", "subgroup-classes diagram on sectors");
    add_groupoid(c_orbit);
    c_orbit->add_option("--base", base, "base object (label or index)")->required();
    CLI::App* c_run = app.add_subcommand("run", "run the document's stored tasks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    int verify_exit = 0;
    try {
        const InputDocument doc = load_document(opt);
        CLI::App* sub = app.get_subcommands().front();
        const std::string cmd = sub->get_name();

        if (cmd == "validate") {
            json payload;
            payload["ok"] = true;
            payload["groups"] = static_cast<int>(doc.groups.size());
            payload["actions"] = static_cast<int>(doc.actions.size());
            payload["groupoids"] = static_cast<int>(doc.groupoids.size());
            payload["tasks"] = static_cast<int>(doc.tasks.size());
            emit(envelope(cmd, {}, payload), opt);
            return 0;
        }
        if (cmd == "run") {
            json results = json::array();
            for (const Task& task : doc.tasks)
                results.push_back(dispatch(task.command, doc, opt, task.params, verify_exit));
            json out;
            out["command"] = "run";
            out["results"] = std::move(results);
            emit(out, opt);
            return verify_exit;
        }

        ParamMap p;
        auto set_if = [&](const char* optname, const char* key, const std::string& val) {
            const CLI::Option* o = sub->get_option_no_throw(optname);
            if (o && o->count()) p[key] = val;
        };
        set_if("--groupoid", "groupoid", groupoid);
        set_if("first", "first", first);
        set_if("second", "second", second);
        set_if("--base", "base", base);
        set_if("--group", "group", cmd == "tomdieck" ? group_name : subgroup_spec);
        set_if("--action", "action", action_name);
        set_if("--degree", "degree", std::to_string(degree));
        set_if("--n", "n", std::to_string(n));
        if (unreduced) p["unreduced"] = "true";

        emit(dispatch(cmd, doc, opt, p, verify_exit), opt);
        return verify_exit;
    } catch (const OrderCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SizeBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const AxiomViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegreeOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Unfaithful& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }

    (void)c_validate;
    (void)c_run;
}
