#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbisect/group.hpp"
#include "orbisect/group_action.hpp"
#include "orbisect/groupoid.hpp"

namespace orbisect {

/// Named entities of an input document. Groups and actions are stored fully
/// expanded (shorthand forms are sugar); groupoids remember which form they
/// were given in so rendering can keep references as references.

struct NamedGroup {
    std::string name;
    FiniteGroup group;
};

struct NamedAction {
    std::string name;
    std::string group;  // name of the acting group
    GroupAction action;
};

enum class GroupoidForm { Translation, OneObject, Discrete, Explicit };

struct NamedGroupoid {
    std::string name;
    GroupoidForm form = GroupoidForm::Explicit;
    std::string group_ref;   // Translation and OneObject forms
    std::string action_ref;  // Translation form
    FiniteGroupoid gpd;
};

/// A stored command invocation; parameter values are canonicalized to
/// strings ("2", "true", "H2.1").
struct Task {
    std::string command;
    std::map<std::string, std::string> params;

    bool operator==(const Task&) const = default;
};

struct InputDocument {
    std::vector<NamedGroup> groups;        // sorted by name
    std::vector<NamedAction> actions;      // sorted by name
    std::vector<NamedGroupoid> groupoids;  // sorted by name
    std::vector<Task> tasks;

    const NamedGroup* find_group(const std::string& name) const;
    const NamedAction* find_action(const std::string& name) const;
    const NamedGroupoid* find_groupoid(const std::string& name) const;
};

bool operator==(const InputDocument& a, const InputDocument& b);

/// Strict parse of a schema-1 document: unknown fields are rejected, every
/// table passes its module's axiom suite, every reference resolves.
/// Throws ParseError / AxiomViolation / OrderCapExceeded.
InputDocument parse_document(const std::string& text, int order_cap = kDefaultOrderCap);

/// Canonical JSON (sorted keys, expanded tables, 2-space indent, trailing
/// newline). parse_document(render_document(d)) == d.
std::string render_document(const InputDocument& doc);

}  // namespace orbisect
