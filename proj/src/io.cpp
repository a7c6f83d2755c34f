#include "orbisect/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <initializer_list>
#include <set>

#include "orbisect/catalog.hpp"
#include "orbisect/errors.hpp"

namespace orbisect {

using nlohmann::json;

namespace {

// ---------- strict JSON access ----------

void expect_known_fields(const json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (item.key() == a) {
                ok = true;
                break;
            }
        if (!ok) throw ParseError(path + "." + item.key(), "unknown field");
    }
}

const json& expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    return j;
}

int expect_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
    return j.get<int>();
}

std::string expect_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw ParseError(path, "expected a string");
    return j.get<std::string>();
}

std::vector<int> expect_int_vector(const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array of integers");
    std::vector<int> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(expect_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::vector<int>> expect_int_matrix(const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array of arrays");
    std::vector<std::vector<int>> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(expect_int_vector(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::string> expect_string_vector(const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array of strings");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(expect_string(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::string> default_labels(int n, const std::string& stem) {
    std::vector<std::string> out(n);
    for (int i = 0; i < n; ++i) out[i] = stem + std::to_string(i);
    return out;
}

// ---------- groups ----------

bool has_exactly_one_of(const json& spec, std::initializer_list<const char*> keys,
                        std::string& which) {
    int hits = 0;
    for (const char* k : keys)
        if (spec.contains(k)) {
            ++hits;
            which = k;
        }
    return hits == 1;
}

// Everything except the "product" form, which needs other groups resolved.
FiniteGroup parse_simple_group(const json& spec, const std::string& path, int order_cap) {
    expect_object(spec, path);
    expect_known_fields(spec, path,
                        {"table", "labels", "permutations", "cyclic", "symmetric", "dihedral",
                         "quaternion"});
    std::string form;
    if (!has_exactly_one_of(spec, {"table", "permutations", "cyclic", "symmetric", "dihedral",
                                   "quaternion"},
                            form))
        throw ParseError(path, "need exactly one of: table, permutations, cyclic, symmetric, "
                               "dihedral, quaternion, product");
    if (spec.contains("labels") && form != "table")
        throw ParseError(path + ".labels", "labels only apply to the table form");

    FiniteGroup G;
    if (form == "table") {
        std::vector<std::string> labels;
        if (spec.contains("labels")) labels = expect_string_vector(spec["labels"], path + ".labels");
        G = FiniteGroup::from_table(expect_int_matrix(spec["table"], path + ".table"),
                                    std::move(labels), path);
    } else if (form == "permutations") {
        auto gens = expect_int_matrix(spec["permutations"], path + ".permutations");
        if (gens.empty()) throw ParseError(path + ".permutations", "need at least one generator");
        const int degree = static_cast<int>(gens[0].size());
        if (degree == 0) throw ParseError(path + ".permutations", "generators must move something");
        for (const auto& g : gens)
            if (static_cast<int>(g.size()) != degree)
                throw ParseError(path + ".permutations", "generators must have equal length");
        G = from_permutations(degree, gens, path);
    } else if (form == "cyclic") {
        const int n = expect_int(spec["cyclic"], path + ".cyclic");
        if (n < 1) throw ParseError(path + ".cyclic", "order must be >= 1");
        G = cyclic_group(n);
    } else if (form == "symmetric") {
        const int n = expect_int(spec["symmetric"], path + ".symmetric");
        if (n < 1 || n > 5) throw ParseError(path + ".symmetric", "supported range is 1..5");
        G = symmetric_group(n);
    } else if (form == "dihedral") {
        const int n = expect_int(spec["dihedral"], path + ".dihedral");
        if (n < 1) throw ParseError(path + ".dihedral", "need n >= 1");
        G = dihedral_group(n);
    } else {  // quaternion
        if (!spec["quaternion"].is_boolean() || !spec["quaternion"].get<bool>())
            throw ParseError(path + ".quaternion", "expected true");
        G = quaternion_group();
    }
    if (G.order() > order_cap) throw OrderCapExceeded(G.order(), order_cap);
    return G;
}

void parse_groups(const json& obj, const std::string& path, int order_cap, InputDocument& doc) {
    expect_object(obj, path);
    struct PendingProduct {
        std::string name;
        std::string left, right;
    };
    std::vector<PendingProduct> pending;
    for (const auto& item : obj.items()) {
        const std::string gpath = path + "." + item.key();
        const json& spec = item.value();
        expect_object(spec, gpath);
        if (spec.contains("product")) {
            expect_known_fields(spec, gpath, {"product"});
            auto refs = expect_string_vector(spec["product"], gpath + ".product");
            if (refs.size() != 2) throw ParseError(gpath + ".product", "expected two group names");
            pending.push_back({item.key(), refs[0], refs[1]});
        } else {
            doc.groups.push_back({item.key(), parse_simple_group(spec, gpath, order_cap)});
        }
    }
    // products may reference other products; iterate to a fixpoint
    bool progress = true;
    while (progress && !pending.empty()) {
        progress = false;
        for (std::size_t i = 0; i < pending.size(); ++i) {
            const NamedGroup* a = doc.find_group(pending[i].left);
            const NamedGroup* b = doc.find_group(pending[i].right);
            if (!a || !b) continue;
            FiniteGroup G = direct_product(a->group, b->group);
            if (G.order() > order_cap) throw OrderCapExceeded(G.order(), order_cap);
            doc.groups.push_back({pending[i].name, std::move(G)});
            pending.erase(pending.begin() + static_cast<long>(i));
            progress = true;
            break;
        }
    }
    if (!pending.empty()) {
        const auto& p = pending.front();
        const std::string missing = doc.find_group(p.left) ? p.right : p.left;
        throw ParseError(path + "." + p.name + ".product", "references undefined group '" + missing + "'");
    }
    std::sort(doc.groups.begin(), doc.groups.end(),
              [](const NamedGroup& x, const NamedGroup& y) { return x.name < y.name; });
}

// ---------- actions ----------

int group_element_by_key(const FiniteGroup& G, const std::string& key, const std::string& path) {
    for (int i = 0; i < G.order(); ++i)
        if (G.label(i) == key) return i;
    if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos) {
        const int idx = std::stoi(key);
        if (idx < G.order()) return idx;
    }
    throw ParseError(path, "'" + key + "' names no group element");
}

GroupAction parse_simple_action(const json& spec, const std::string& path, const FiniteGroup& G,
                                const std::string& form) {
    GroupAction A;
    if (form == "table") {
        A.table = expect_int_matrix(spec["table"], path + ".table");
        A.degree = A.table.empty() ? 0 : static_cast<int>(A.table[0].size());
        A.point_labels = default_labels(A.degree, "p");
    } else if (form == "generators") {
        if (!spec.contains("points")) throw ParseError(path, "generator form needs 'points'");
        const int npoints = expect_int(spec["points"], path + ".points");
        if (npoints < 0) throw ParseError(path + ".points", "point count must be >= 0");
        expect_object(spec["generators"], path + ".generators");
        std::vector<int> gens;
        std::vector<std::vector<int>> perms;
        for (const auto& item : spec["generators"].items()) {
            gens.push_back(group_element_by_key(G, item.key(), path + ".generators"));
            perms.push_back(expect_int_vector(item.value(), path + ".generators." + item.key()));
        }
        A = action_from_generator_images(G, gens, perms, npoints, path);
    } else if (form == "trivial") {
        const int n = expect_int(spec["trivial"], path + ".trivial");
        if (n < 0) throw ParseError(path + ".trivial", "point count must be >= 0");
        A = trivial_action(G, n);
    } else if (form == "regular") {
        if (!spec["regular"].is_boolean() || !spec["regular"].get<bool>())
            throw ParseError(path + ".regular", "expected true");
        A = regular_action(G);
    } else {  // cosets
        Subgroup H{expect_int_vector(spec["cosets"], path + ".cosets")};
        std::sort(H.elems.begin(), H.elems.end());
        for (int e : H.elems)
            if (e < 0 || e >= G.order())
                throw ParseError(path + ".cosets", "element index " + std::to_string(e) +
                                                       " out of range");
        validate_subgroup(G, H, path + ".cosets");
        A = coset_action(G, H);
    }
    return A;
}

void parse_actions(const json& obj, const std::string& path, InputDocument& doc) {
    expect_object(obj, path);
    struct PendingUnion {
        std::string name, group;
        std::vector<std::string> parts;
        std::string path;
        json labels;  // null when absent
    };
    std::vector<PendingUnion> pending;
    for (const auto& item : obj.items()) {
        const std::string apath = path + "." + item.key();
        const json& spec = item.value();
        expect_object(spec, apath);
        expect_known_fields(spec, apath, {"group", "table", "generators", "points", "trivial",
                                          "regular", "cosets", "union", "point_labels"});
        if (!spec.contains("group")) throw ParseError(apath, "missing field 'group'");
        const std::string gname = expect_string(spec["group"], apath + ".group");
        const NamedGroup* g = doc.find_group(gname);
        if (!g) throw ParseError(apath + ".group", "references undefined group '" + gname + "'");

        std::string form;
        if (!has_exactly_one_of(spec, {"table", "generators", "trivial", "regular", "cosets",
                                       "union"},
                                form))
            throw ParseError(apath,
                             "need exactly one of: table, generators, trivial, regular, cosets, "
                             "union");
        if (spec.contains("points") && form != "generators")
            throw ParseError(apath + ".points", "'points' only applies to the generator form");

        if (form == "union") {
            PendingUnion u;
            u.name = item.key();
            u.group = gname;
            u.parts = expect_string_vector(spec["union"], apath + ".union");
            u.path = apath;
            u.labels = spec.contains("point_labels") ? spec["point_labels"] : json();
            pending.push_back(std::move(u));
            continue;
        }
        GroupAction A = parse_simple_action(spec, apath, g->group, form);
        if (spec.contains("point_labels")) {
            auto labels = expect_string_vector(spec["point_labels"], apath + ".point_labels");
            if (static_cast<int>(labels.size()) != A.degree)
                throw ParseError(apath + ".point_labels", "expected " + std::to_string(A.degree) +
                                                              " labels");
            A.point_labels = std::move(labels);
        }
        validate_action(g->group, A, apath);
        doc.actions.push_back({item.key(), gname, std::move(A)});
    }
    bool progress = true;
    while (progress && !pending.empty()) {
        progress = false;
        for (std::size_t i = 0; i < pending.size(); ++i) {
            PendingUnion& u = pending[i];
            std::vector<GroupAction> parts;
            bool ready = true;
            for (const std::string& pname : u.parts) {
                const NamedAction* p = doc.find_action(pname);
                if (!p) {
                    ready = false;
                    break;
                }
                if (p->group != u.group)
                    throw ParseError(u.path + ".union", "part '" + pname + "' acts for group '" +
                                                            p->group + "', not '" + u.group + "'");
                parts.push_back(p->action);
            }
            if (!ready) continue;
            const NamedGroup* g = doc.find_group(u.group);
            GroupAction A = disjoint_union_action(g->group, parts);
            if (!u.labels.is_null()) {
                auto labels = expect_string_vector(u.labels, u.path + ".point_labels");
                if (static_cast<int>(labels.size()) != A.degree)
                    throw ParseError(u.path + ".point_labels",
                                     "expected " + std::to_string(A.degree) + " labels");
                A.point_labels = std::move(labels);
            }
            validate_action(g->group, A, u.path);
            doc.actions.push_back({u.name, u.group, std::move(A)});
            pending.erase(pending.begin() + static_cast<long>(i));
            progress = true;
            break;
        }
    }
    if (!pending.empty()) {
        const auto& u = pending.front();
        std::string missing;
        for (const std::string& pname : u.parts)
            if (!doc.find_action(pname)) {
                missing = pname;
                break;
            }
        throw ParseError(u.path + ".union", "references undefined action '" + missing + "'");
    }
    std::sort(doc.actions.begin(), doc.actions.end(),
              [](const NamedAction& x, const NamedAction& y) { return x.name < y.name; });
}

// ---------- groupoids ----------

FiniteGroupoid parse_explicit_groupoid(const json& spec, const std::string& path) {
    expect_known_fields(spec, path,
                        {"objects", "arrows", "source", "target", "compose", "units", "inverses",
                         "object_labels", "arrow_labels"});
    for (const char* req : {"objects", "source", "target", "compose"})
        if (!spec.contains(req)) throw ParseError(path, std::string("missing field '") + req + "'");

    FiniteGroupoid G;
    G.n_objects = expect_int(spec["objects"], path + ".objects");
    if (G.n_objects < 0) throw ParseError(path + ".objects", "object count must be >= 0");
    G.src = expect_int_vector(spec["source"], path + ".source");
    G.tgt = expect_int_vector(spec["target"], path + ".target");
    if (G.src.size() != G.tgt.size())
        throw ParseError(path, "source and target must have equal length");
    G.n_arrows = static_cast<int>(G.src.size());
    if (spec.contains("arrows") && expect_int(spec["arrows"], path + ".arrows") != G.n_arrows)
        throw ParseError(path + ".arrows", "does not match the source/target length");
    for (int f = 0; f < G.n_arrows; ++f)
        if (G.src[f] < 0 || G.src[f] >= G.n_objects || G.tgt[f] < 0 || G.tgt[f] >= G.n_objects)
            throw ParseError(path, "arrow " + std::to_string(f) + " has an endpoint out of range");

    const auto triples = expect_int_matrix(spec["compose"], path + ".compose");
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const std::string tpath = path + ".compose[" + std::to_string(i) + "]";
        if (triples[i].size() != 3) throw ParseError(tpath, "expected [g, f, gf]");
        const int g = triples[i][0], f = triples[i][1], gf = triples[i][2];
        for (int a : {g, f, gf})
            if (a < 0 || a >= G.n_arrows) throw ParseError(tpath, "arrow index out of range");
        if (G.comp.count(FiniteGroupoid::key(g, f)))
            throw ParseError(tpath, "duplicate composition entry");
        G.set_compose(g, f, gf);
    }

    if (spec.contains("units")) {
        G.unit = expect_int_vector(spec["units"], path + ".units");
        if (static_cast<int>(G.unit.size()) != G.n_objects)
            throw ParseError(path + ".units", "expected one unit per object");
    } else {
        // the unit is the unique idempotent endo-arrow at each object
        G.unit.assign(G.n_objects, -1);
        for (int u = 0; u < G.n_arrows; ++u) {
            if (G.src[u] != G.tgt[u]) continue;
            auto it = G.comp.find(FiniteGroupoid::key(u, u));
            if (it == G.comp.end() || it->second != u) continue;
            if (G.unit[G.src[u]] != -1)
                throw AxiomViolation(path, "unit uniqueness",
                                     "two idempotent endo-arrows at object " +
                                         std::to_string(G.src[u]));
            G.unit[G.src[u]] = u;
        }
        for (int x = 0; x < G.n_objects; ++x)
            if (G.unit[x] == -1)
                throw AxiomViolation(path, "unit existence",
                                     "no idempotent endo-arrow at object " + std::to_string(x));
    }

    if (spec.contains("inverses")) {
        G.inv = expect_int_vector(spec["inverses"], path + ".inverses");
        if (static_cast<int>(G.inv.size()) != G.n_arrows)
            throw ParseError(path + ".inverses", "expected one inverse per arrow");
    } else {
        G.inv.assign(G.n_arrows, -1);
        for (int f = 0; f < G.n_arrows; ++f) {
            for (int g = 0; g < G.n_arrows; ++g) {
                if (G.src[g] != G.tgt[f] || G.tgt[g] != G.src[f]) continue;
                auto it = G.comp.find(FiniteGroupoid::key(g, f));
                if (it != G.comp.end() && it->second == G.unit[G.src[f]]) {
                    G.inv[f] = g;
                    break;
                }
            }
            if (G.inv[f] == -1)
                throw AxiomViolation(path, "inverse existence",
                                     "no left inverse for arrow " + std::to_string(f));
        }
    }

    if (spec.contains("object_labels")) {
        G.object_labels = expect_string_vector(spec["object_labels"], path + ".object_labels");
        if (static_cast<int>(G.object_labels.size()) != G.n_objects)
            throw ParseError(path + ".object_labels", "expected one label per object");
    } else {
        G.object_labels = default_labels(G.n_objects, "x");
    }
    if (spec.contains("arrow_labels")) {
        G.arrow_labels = expect_string_vector(spec["arrow_labels"], path + ".arrow_labels");
        if (static_cast<int>(G.arrow_labels.size()) != G.n_arrows)
            throw ParseError(path + ".arrow_labels", "expected one label per arrow");
    } else {
        G.arrow_labels = default_labels(G.n_arrows, "a");
    }
    validate_groupoid(G, path, Check::Full);
    return G;
}

void parse_groupoids(const json& obj, const std::string& path, InputDocument& doc) {
    expect_object(obj, path);
    for (const auto& item : obj.items()) {
        const std::string gpath = path + "." + item.key();
        const json& spec = item.value();
        expect_object(spec, gpath);
        NamedGroupoid ng;
        ng.name = item.key();
        if (spec.contains("translation")) {
            expect_known_fields(spec, gpath, {"translation"});
            const json& t = expect_object(spec["translation"], gpath + ".translation");
            expect_known_fields(t, gpath + ".translation", {"group", "action"});
            if (!t.contains("group") || !t.contains("action"))
                throw ParseError(gpath + ".translation", "needs 'group' and 'action'");
            ng.group_ref = expect_string(t["group"], gpath + ".translation.group");
            ng.action_ref = expect_string(t["action"], gpath + ".translation.action");
            const NamedGroup* g = doc.find_group(ng.group_ref);
            if (!g)
                throw ParseError(gpath + ".translation.group",
                                 "references undefined group '" + ng.group_ref + "'");
            const NamedAction* a = doc.find_action(ng.action_ref);
            if (!a)
                throw ParseError(gpath + ".translation.action",
                                 "references undefined action '" + ng.action_ref + "'");
            if (a->group != ng.group_ref)
                throw ParseError(gpath + ".translation",
                                 "action '" + ng.action_ref + "' acts for group '" + a->group +
                                     "', not '" + ng.group_ref + "'");
            ng.form = GroupoidForm::Translation;
            ng.gpd = translation_groupoid(g->group, a->action);
        } else if (spec.contains("group")) {
            expect_known_fields(spec, gpath, {"group"});
            ng.group_ref = expect_string(spec["group"], gpath + ".group");
            const NamedGroup* g = doc.find_group(ng.group_ref);
            if (!g)
                throw ParseError(gpath + ".group",
                                 "references undefined group '" + ng.group_ref + "'");
            ng.form = GroupoidForm::OneObject;
            ng.gpd = from_group(g->group);
        } else if (spec.contains("discrete")) {
            expect_known_fields(spec, gpath, {"discrete", "object_labels"});
            const int n = expect_int(spec["discrete"], gpath + ".discrete");
            if (n < 0) throw ParseError(gpath + ".discrete", "point count must be >= 0");
            std::vector<std::string> labels;
            if (spec.contains("object_labels")) {
                labels = expect_string_vector(spec["object_labels"], gpath + ".object_labels");
                if (static_cast<int>(labels.size()) != n)
                    throw ParseError(gpath + ".object_labels", "expected one label per object");
            }
            ng.form = GroupoidForm::Discrete;
            ng.gpd = unit_groupoid(n, labels);
        } else {
            ng.form = GroupoidForm::Explicit;
            ng.gpd = parse_explicit_groupoid(spec, gpath);
        }
        doc.groupoids.push_back(std::move(ng));
    }
    std::sort(doc.groupoids.begin(), doc.groupoids.end(),
              [](const NamedGroupoid& x, const NamedGroupoid& y) { return x.name < y.name; });
}

// ---------- tasks ----------

const std::map<std::string, std::set<std::string>>& task_params() {
    static const std::map<std::string, std::set<std::string>> t = {
        {"sectors", {"groupoid"}},
        {"reduced", {"groupoid"}},
        {"morita", {"first", "second"}},
        {"homology", {"groupoid", "degree"}},
        {"pi", {"groupoid", "base", "n"}},
        {"extended-pi", {"groupoid", "base", "group", "n"}},
        {"stable", {"groupoid", "n", "unreduced"}},
        {"tomdieck", {"group", "action", "n"}},
        {"verify-invariance", {"first", "second"}},
        {"orbit-diagram", {"groupoid", "base"}},
    };
    return t;
}

std::string scalar_to_string(const json& v, const std::string& path) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError(path, "expected a string, integer or boolean");
}

void parse_tasks(const json& arr, const std::string& path, InputDocument& doc) {
    if (!arr.is_array()) throw ParseError(path, "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string tpath = path + "[" + std::to_string(i) + "]";
        const json& spec = expect_object(arr[i], tpath);
        if (!spec.contains("command")) throw ParseError(tpath, "missing field 'command'");
        Task task;
        task.command = expect_string(spec["command"], tpath + ".command");
        const auto it = task_params().find(task.command);
        if (it == task_params().end())
            throw ParseError(tpath + ".command", "unknown command '" + task.command + "'");
        for (const auto& item : spec.items()) {
            if (item.key() == "command") continue;
            if (!it->second.count(item.key()))
                throw ParseError(tpath + "." + item.key(),
                                 "unknown parameter for '" + task.command + "'");
            task.params[item.key()] = scalar_to_string(item.value(), tpath + "." + item.key());
        }
        // reference checks (extended-pi's "group" is a subgroup spec, not a name)
        auto check_groupoid_ref = [&](const char* key) {
            const auto p = task.params.find(key);
            if (p != task.params.end() && !doc.find_groupoid(p->second))
                throw ParseError(tpath + "." + key,
                                 "references undefined groupoid '" + p->second + "'");
        };
        check_groupoid_ref("groupoid");
        if (task.command == "morita" || task.command == "verify-invariance") {
            check_groupoid_ref("first");
            check_groupoid_ref("second");
            if (task.command == "verify-invariance")
                for (const char* key : {"first", "second"}) {
                    const auto p = task.params.find(key);
                    if (p == task.params.end()) continue;
                    const NamedGroupoid* g = doc.find_groupoid(p->second);
                    if (g->form != GroupoidForm::Translation)
                        throw ParseError(tpath + "." + key,
                                         "'" + p->second + "' is not a translation groupoid");
                }
        }
        if (task.command == "tomdieck") {
            const auto pg = task.params.find("group");
            const auto pa = task.params.find("action");
            if (pg != task.params.end() && !doc.find_group(pg->second))
                throw ParseError(tpath + ".group",
                                 "references undefined group '" + pg->second + "'");
            if (pa != task.params.end()) {
                const NamedAction* a = doc.find_action(pa->second);
                if (!a)
                    throw ParseError(tpath + ".action",
                                     "references undefined action '" + pa->second + "'");
                if (pg != task.params.end() && a->group != pg->second)
                    throw ParseError(tpath + ".action", "action '" + pa->second +
                                                            "' acts for group '" + a->group + "'");
            }
        }
        doc.tasks.push_back(std::move(task));
    }
}

// ---------- rendering ----------

json group_to_json(const FiniteGroup& G) {
    json j;
    j["labels"] = G.labels();
    json table = json::array();
    for (int a = 0; a < G.order(); ++a) {
        json row = json::array();
        for (int b = 0; b < G.order(); ++b) row.push_back(G.mul(a, b));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    return j;
}

json action_to_json(const NamedAction& a) {
    json j;
    j["group"] = a.group;
    j["point_labels"] = a.action.point_labels;
    j["table"] = a.action.table;
    return j;
}

json groupoid_to_json(const NamedGroupoid& g) {
    json j;
    switch (g.form) {
        case GroupoidForm::Translation:
            j["translation"] = {{"group", g.group_ref}, {"action", g.action_ref}};
            return j;
        case GroupoidForm::OneObject:
            j["group"] = g.group_ref;
            return j;
        case GroupoidForm::Discrete:
            j["discrete"] = g.gpd.n_objects;
            j["object_labels"] = g.gpd.object_labels;
            return j;
        case GroupoidForm::Explicit:
            break;
    }
    j["objects"] = g.gpd.n_objects;
    j["source"] = g.gpd.src;
    j["target"] = g.gpd.tgt;
    std::vector<std::array<int, 3>> triples;
    triples.reserve(g.gpd.comp.size());
    for (const auto& [k, gf] : g.gpd.comp)
        triples.push_back({static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), gf});
    std::sort(triples.begin(), triples.end());
    json comp = json::array();
    for (const auto& t : triples) comp.push_back({t[0], t[1], t[2]});
    j["compose"] = std::move(comp);
    j["units"] = g.gpd.unit;
    j["inverses"] = g.gpd.inv;
    j["object_labels"] = g.gpd.object_labels;
    j["arrow_labels"] = g.gpd.arrow_labels;
    return j;
}

// ---------- equality ----------

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order() || a.labels() != b.labels()) return false;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            if (a.mul(i, j) != b.mul(i, j)) return false;
    return true;
}

bool same_action(const NamedAction& a, const NamedAction& b) {
    return a.name == b.name && a.group == b.group && a.action.degree == b.action.degree &&
           a.action.table == b.action.table && a.action.point_labels == b.action.point_labels;
}

bool same_groupoid(const NamedGroupoid& a, const NamedGroupoid& b) {
    return a.name == b.name && a.form == b.form && a.group_ref == b.group_ref &&
           a.action_ref == b.action_ref && a.gpd.n_objects == b.gpd.n_objects &&
           a.gpd.n_arrows == b.gpd.n_arrows && a.gpd.src == b.gpd.src && a.gpd.tgt == b.gpd.tgt &&
           a.gpd.unit == b.gpd.unit && a.gpd.inv == b.gpd.inv && a.gpd.comp == b.gpd.comp &&
           a.gpd.object_labels == b.gpd.object_labels && a.gpd.arrow_labels == b.gpd.arrow_labels;
}

}  // namespace

const NamedGroup* InputDocument::find_group(const std::string& name) const {
    for (const auto& g : groups)
        if (g.name == name) return &g;
    return nullptr;
}

const NamedAction* InputDocument::find_action(const std::string& name) const {
    for (const auto& a : actions)
        if (a.name == name) return &a;
    return nullptr;
}

const NamedGroupoid* InputDocument::find_groupoid(const std::string& name) const {
    for (const auto& g : groupoids)
        if (g.name == name) return &g;
    return nullptr;
}

bool operator==(const InputDocument& a, const InputDocument& b) {
    if (a.groups.size() != b.groups.size() || a.actions.size() != b.actions.size() ||
        a.groupoids.size() != b.groupoids.size() || a.tasks != b.tasks)
        return false;
    for (std::size_t i = 0; i < a.groups.size(); ++i)
        if (a.groups[i].name != b.groups[i].name || !same_group(a.groups[i].group, b.groups[i].group))
            return false;
    for (std::size_t i = 0; i < a.actions.size(); ++i)
        if (!same_action(a.actions[i], b.actions[i])) return false;
    for (std::size_t i = 0; i < a.groupoids.size(); ++i)
        if (!same_groupoid(a.groupoids[i], b.groupoids[i])) return false;
    return true;
}

InputDocument parse_document(const std::string& text, int order_cap) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("<input>", e.what());
    }
    expect_object(root, "<document>");
    expect_known_fields(root, "<document>", {"schema", "groups", "actions", "groupoids", "tasks"});
    if (!root.contains("schema")) throw ParseError("<document>", "missing field 'schema'");
    if (expect_int(root["schema"], "schema") != 1)
        throw ParseError("schema", "unsupported schema version (expected 1)");

    InputDocument doc;
    if (root.contains("groups")) parse_groups(root["groups"], "groups", order_cap, doc);
    if (root.contains("actions")) parse_actions(root["actions"], "actions", doc);
    if (root.contains("groupoids")) parse_groupoids(root["groupoids"], "groupoids", doc);
    if (root.contains("tasks")) parse_tasks(root["tasks"], "tasks", doc);
    return doc;
}

std::string render_document(const InputDocument& doc) {
    json root;
    root["schema"] = 1;
    if (!doc.groups.empty()) {
        json g = json::object();
        for (const auto& ng : doc.groups) g[ng.name] = group_to_json(ng.group);
        root["groups"] = std::move(g);
    }
    if (!doc.actions.empty()) {
        json a = json::object();
        for (const auto& na : doc.actions) a[na.name] = action_to_json(na);
        root["actions"] = std::move(a);
    }
    if (!doc.groupoids.empty()) {
        json g = json::object();
        for (const auto& ng : doc.groupoids) g[ng.name] = groupoid_to_json(ng);
        root["groupoids"] = std::move(g);
    }
    if (!doc.tasks.empty()) {
        json t = json::array();
        for (const auto& task : doc.tasks) {
            json entry;
            entry["command"] = task.command;
            for (const auto& [k, v] : task.params) entry[k] = v;
            t.push_back(std::move(entry));
        }
        root["tasks"] = std::move(t);
    }
    return root.dump(2) + "\n";
}

}  // namespace orbisect
