#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include <algorithm>

#include "orbisect/catalog.hpp"
#include "orbisect/errors.hpp"
#include "orbisect/homology.hpp"
#include "orbisect/invariants.hpp"
#include "orbisect/reports.hpp"
#include "orbisect/sectors.hpp"

namespace py = pybind11;
using namespace orbisect;

namespace {

// reports are already deterministic JSON; hand them to python as dicts
py::object to_py(const nlohmann::json& j) {
    py::module_ json_mod = py::module_::import("json");
    return json_mod.attr("loads")(j.dump());
}

py::object homology_py(const FiniteGroupoid& G, int n, long budget) {
    return to_py(fg_abelian_to_json(homology(G, n, budget)));
}

py::object pi_py(const FiniteGroupoid& G, int x, int n) {
    return to_py(group_descriptor(pi_orb(G, x, n)));
}

py::object extended_pi_py(const FiniteGroupoid& G, int x, const std::vector<int>& gens, int n,
                          int order_cap) {
    const SectorContext ctx = build_sectors(G, order_cap);
    const IsotropyGroup iso = isotropy(G, x);
    const Subgroup H = generated_subgroup(iso.group, gens);
    std::vector<int> arrows;
    for (int h : H.elems) arrows.push_back(iso.arrow_of_elem[h]);
    std::sort(arrows.begin(), arrows.end());
    const int point = ctx.tilde.space.point_index(x, arrows);
    if (point < 0) throw std::logic_error("sector point lookup failed");
    return to_py(group_descriptor(extended_pi(ctx, point, n)));
}

py::object sectors_py(const FiniteGroupoid& G, int order_cap) {
    return to_py(sectors_report(G, sector_groupoid(G, order_cap)));
}

py::object reduced_py(const FiniteGroupoid& G, int order_cap) {
    return to_py(reduced_report(build_sectors(G, order_cap)));
}

py::object stable_py(const FiniteGroupoid& G, int n, bool unreduced, int order_cap) {
    const SectorContext ctx = build_sectors(G, order_cap);
    return to_py(stable_report(unreduced ? stable_pi_orb_unreduced(ctx, n)
                                         : stable_pi_orb(ctx, n)));
}

py::object morita_py(const FiniteGroupoid& A, const FiniteGroupoid& B, int order_cap) {
    return to_py(morita_report(A, B, morita_equivalent(A, B, order_cap)));
}

py::object equivariant_py(const FiniteGroup& G, const GroupAction& X, int n, int order_cap) {
    return to_py(tomdieck_report(G, equivariant_stable_pi(G, X, n, order_cap)));
}

py::object verify_py(const FiniteGroup& G1, const GroupAction& X1, const FiniteGroup& G2,
                     const GroupAction& X2, int order_cap) {
    return to_py(invariance_report(verify_presentation_independence(G1, X1, G2, X2, order_cap)));
}

}  // namespace

PYBIND11_MODULE(orbisect, m) {
    m.doc() = "fixed-point sectors and stable invariants of finite groupoids";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<AxiomViolation>(m, "AxiomViolation", PyExc_ValueError);
    py::register_exception<DegreeOutOfRange>(m, "DegreeOutOfRange", PyExc_ValueError);
    py::register_exception<Unfaithful>(m, "Unfaithful", PyExc_ValueError);
    py::register_exception<OrderCapExceeded>(m, "OrderCapExceeded", PyExc_RuntimeError);
    py::register_exception<SizeBudgetExceeded>(m, "SizeBudgetExceeded", PyExc_RuntimeError);

    py::class_<FiniteGroup>(m, "Group")
        .def("order", &FiniteGroup::order)
        .def("mul", &FiniteGroup::mul)
        .def("inv", &FiniteGroup::inv)
        .def("identity", &FiniteGroup::identity)
        .def("label", &FiniteGroup::label, py::return_value_policy::copy)
        .def("is_abelian", &FiniteGroup::is_abelian)
        .def("__repr__", [](const FiniteGroup& g) {
            return "<Group of order " + std::to_string(g.order()) + ">";
        });

    py::class_<GroupAction>(m, "Action")
        .def_readonly("degree", &GroupAction::degree)
        .def("act", &GroupAction::act)
        .def("__repr__", [](const GroupAction& a) {
            return "<Action on " + std::to_string(a.degree) + " points>";
        });

    py::class_<FiniteGroupoid>(m, "Groupoid")
        .def_readonly("n_objects", &FiniteGroupoid::n_objects)
        .def_readonly("n_arrows", &FiniteGroupoid::n_arrows)
        .def("__repr__", [](const FiniteGroupoid& g) {
            return "<Groupoid: " + std::to_string(g.n_objects) + " objects, " +
                   std::to_string(g.n_arrows) + " arrows>";
        });

    // groups
    m.def("cyclic", &cyclic_group, py::arg("n"));
    m.def("symmetric", &symmetric_group, py::arg("n"));
    m.def("dihedral", &dihedral_group, py::arg("n"));
    m.def("quaternion", &quaternion_group);
    m.def("product", &direct_product, py::arg("a"), py::arg("b"));
    m.def("abelianization",
          [](const FiniteGroup& G) { return to_py(fg_abelian_to_json(abelianization(G))); });

    // actions
    m.def("trivial_action", &trivial_action, py::arg("group"), py::arg("points"));
    m.def("regular_action", &regular_action, py::arg("group"));
    m.def("coset_action",
          [](const FiniteGroup& G, std::vector<int> elems) {
              std::sort(elems.begin(), elems.end());
              Subgroup H{std::move(elems)};
              validate_subgroup(G, H);
              return coset_action(G, H);
          },
          py::arg("group"), py::arg("subgroup"));
    m.def("union_action", &disjoint_union_action, py::arg("group"), py::arg("parts"));

    // groupoids
    m.def("from_group", &from_group, py::arg("group"));
    m.def("discrete", &unit_groupoid, py::arg("points"),
          py::arg("labels") = std::vector<std::string>{});
    m.def("translation", &translation_groupoid, py::arg("group"), py::arg("action"));
    m.def("components", &components, py::arg("groupoid"));

    // invariants
    m.def("homology", &homology_py, py::arg("groupoid"), py::arg("n"),
          py::arg("budget") = kDefaultSimplexBudget);
    m.def("pi", &pi_py, py::arg("groupoid"), py::arg("base"), py::arg("n"));
    m.def("extended_pi", &extended_pi_py, py::arg("groupoid"), py::arg("base"),
          py::arg("generators"), py::arg("n"), py::arg("order_cap") = kDefaultOrderCap);
    m.def("sectors", &sectors_py, py::arg("groupoid"), py::arg("order_cap") = kDefaultOrderCap);
    m.def("reduced", &reduced_py, py::arg("groupoid"), py::arg("order_cap") = kDefaultOrderCap);
    m.def("stable_pi", &stable_py, py::arg("groupoid"), py::arg("n"),
          py::arg("unreduced") = false, py::arg("order_cap") = kDefaultOrderCap);
    m.def("morita", &morita_py, py::arg("first"), py::arg("second"),
          py::arg("order_cap") = kDefaultOrderCap);
    m.def("equivariant_stable", &equivariant_py, py::arg("group"), py::arg("action"),
          py::arg("n"), py::arg("order_cap") = kDefaultOrderCap);
    m.def("verify_invariance", &verify_py, py::arg("group1"), py::arg("action1"),
          py::arg("group2"), py::arg("action2"), py::arg("order_cap") = kDefaultOrderCap);
}
