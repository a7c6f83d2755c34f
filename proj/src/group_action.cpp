#include "orbisect/group_action.hpp"

#include <algorithm>
#include <numeric>

#include "orbisect/errors.hpp"

namespace orbisect {

namespace {

std::vector<std::string> default_point_labels(int n, const std::string& stem) {
    std::vector<std::string> out(n);
    for (int i = 0; i < n; ++i) out[i] = stem + std::to_string(i);
    return out;
}

}  // namespace

void validate_action(const FiniteGroup& G, const GroupAction& A, const std::string& where) {
    if (A.degree < 0) throw AxiomViolation(where, "negative degree", std::to_string(A.degree));
    if (static_cast<int>(A.table.size()) != G.order())
        throw AxiomViolation(where, "table has one row per group element",
                             "rows=" + std::to_string(A.table.size()) +
                                 " order=" + std::to_string(G.order()));
    if (static_cast<int>(A.point_labels.size()) != A.degree)
        throw AxiomViolation(where, "one label per point",
                             "labels=" + std::to_string(A.point_labels.size()));
    for (int g = 0; g < G.order(); ++g) {
        if (static_cast<int>(A.table[g].size()) != A.degree)
            throw AxiomViolation(where, "row length equals degree", "row " + std::to_string(g));
        std::vector<char> hit(A.degree, 0);
        for (int x = 0; x < A.degree; ++x) {
            int y = A.table[g][x];
            if (y < 0 || y >= A.degree || hit[y])
                throw AxiomViolation(where, "row is a permutation",
                                     "element " + G.label(g) + ", point " + std::to_string(x));
            hit[y] = 1;
        }
    }
    for (int x = 0; x < A.degree; ++x)
        if (A.table[G.identity()][x] != x)
            throw AxiomViolation(where, "identity acts trivially, point " + std::to_string(x),
                                 "sent to " + std::to_string(A.table[G.identity()][x]));
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h)
            for (int x = 0; x < A.degree; ++x)
                if (A.act(g, A.act(h, x)) != A.act(G.mul(g, h), x))
                    throw AxiomViolation(where, "compatibility g.(h.x) = (gh).x",
                                         G.label(g) + "," + G.label(h) + "," + std::to_string(x));
}

GroupAction trivial_action(const FiniteGroup& G, int npoints) {
    GroupAction A;
    A.degree = npoints;
    std::vector<int> id(npoints);
    std::iota(id.begin(), id.end(), 0);
    A.table.assign(G.order(), id);
    A.point_labels = default_point_labels(npoints, "p");
    return A;
}

GroupAction regular_action(const FiniteGroup& G) {
    GroupAction A;
    A.degree = G.order();
    A.table.resize(G.order(), std::vector<int>(G.order()));
    for (int g = 0; g < G.order(); ++g)
        for (int x = 0; x < G.order(); ++x) A.table[g][x] = G.mul(g, x);
    A.point_labels.resize(G.order());
    for (int x = 0; x < G.order(); ++x) A.point_labels[x] = G.label(x);
    return A;
}

GroupAction coset_action(const FiniteGroup& G, const Subgroup& H) {
    validate_subgroup(G, H, "coset action");
    // enumerate left cosets gH by least member
    std::vector<int> coset_of(G.order(), -1);
    std::vector<int> reps;
    for (int g = 0; g < G.order(); ++g) {
        if (coset_of[g] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(g);
        for (int h : H.elems) coset_of[G.mul(g, h)] = c;
    }
    GroupAction A;
    A.degree = static_cast<int>(reps.size());
    A.table.resize(G.order(), std::vector<int>(A.degree));
    for (int g = 0; g < G.order(); ++g)
        for (int c = 0; c < A.degree; ++c) A.table[g][c] = coset_of[G.mul(g, reps[c])];
    A.point_labels.resize(A.degree);
    for (int c = 0; c < A.degree; ++c) A.point_labels[c] = G.label(reps[c]) + "H";
    return A;
}

GroupAction disjoint_union_action(const FiniteGroup& G, const std::vector<GroupAction>& parts) {
    GroupAction A;
    A.degree = 0;
    A.table.assign(G.order(), {});
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto& P = parts[p];
        for (int g = 0; g < G.order(); ++g)
            for (int x = 0; x < P.degree; ++x) A.table[g].push_back(A.degree + P.act(g, x));
        for (int x = 0; x < P.degree; ++x)
            A.point_labels.push_back(std::to_string(p) + ":" + P.point_labels[x]);
        A.degree += P.degree;
    }
    return A;
}

GroupAction action_from_generator_images(const FiniteGroup& G, const std::vector<int>& gens,
                                         const std::vector<std::vector<int>>& perms, int npoints,
                                         const std::string& where) {
    if (gens.size() != perms.size())
        throw AxiomViolation(where, "one permutation per generator", "");
    for (std::size_t i = 0; i < perms.size(); ++i) {
        if (static_cast<int>(perms[i].size()) != npoints)
            throw AxiomViolation(where, "permutation length equals point count",
                                 "generator " + std::to_string(i));
        std::vector<char> hit(npoints, 0);
        for (int v : perms[i]) {
            if (v < 0 || v >= npoints || hit[v])
                throw AxiomViolation(where, "generator image is a permutation",
                                     "generator " + std::to_string(i));
            hit[v] = 1;
        }
    }
    GroupAction A;
    A.degree = npoints;
    A.table.assign(G.order(), {});
    std::vector<int> id(npoints);
    std::iota(id.begin(), id.end(), 0);
    A.table[G.identity()] = id;
    // BFS over the group: once g has a permutation, gens[i]*g gets one too
    std::vector<int> queue = {G.identity()};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int g = queue[qi];
        for (std::size_t i = 0; i < gens.size(); ++i) {
            int n = G.mul(gens[i], g);
            std::vector<int> perm(npoints);
            for (int x = 0; x < npoints; ++x) perm[x] = perms[i][A.table[g][x]];
            if (A.table[n].empty()) {
                A.table[n] = std::move(perm);
                queue.push_back(n);
            } else if (A.table[n] != perm) {
                throw AxiomViolation(where, "generator images define an action",
                                     "conflicting permutations for " + G.label(n));
            }
        }
    }
    if (static_cast<int>(queue.size()) != G.order())
        throw AxiomViolation(where, "generators generate the group",
                             "reached " + std::to_string(queue.size()) + " of " +
                                 std::to_string(G.order()) + " elements");
    A.point_labels = default_point_labels(npoints, "p");
    validate_action(G, A, where);
    return A;
}

std::vector<int> fixed_points(const GroupAction& A, const Subgroup& H) {
    std::vector<int> out;
    for (int x = 0; x < A.degree; ++x) {
        bool fixed = true;
        for (int h : H.elems)
            if (A.act(h, x) != x) {
                fixed = false;
                break;
            }
        if (fixed) out.push_back(x);
    }
    return out;
}

std::vector<std::vector<int>> orbits(const FiniteGroup& G, const GroupAction& A) {
    std::vector<char> seen(A.degree, 0);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < A.degree; ++x) {
        if (seen[x]) continue;
        std::vector<int> orb;
        for (int g = 0; g < G.order(); ++g) {
            int y = A.act(g, x);
            if (!seen[y]) {
                seen[y] = 1;
                orb.push_back(y);
            }
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

Subgroup stabilizer(const FiniteGroup& G, const GroupAction& A, int x) {
    Subgroup s;
    for (int g = 0; g < G.order(); ++g)
        if (A.act(g, x) == x) s.elems.push_back(g);
    return s;
}

bool is_free_action(const FiniteGroup& G, const GroupAction& A) {
    for (int x = 0; x < A.degree; ++x)
        if (stabilizer(G, A, x).order() != 1) return false;
    return true;
}

bool is_transitive_action(const FiniteGroup& G, const GroupAction& A) {
    return A.degree > 0 && static_cast<int>(orbits(G, A).front().size()) == A.degree;
}

WeylFixedAction weyl_fixed_action(const FiniteGroup& G, const GroupAction& A, const Subgroup& H) {
    WeylGroup W = weyl_with_reps(G, H);
    std::vector<int> fixed = fixed_points(A, H);
    std::vector<int> pos(A.degree, -1);
    for (std::size_t i = 0; i < fixed.size(); ++i) pos[fixed[i]] = static_cast<int>(i);

    WeylFixedAction out;
    out.group = W.group;
    out.point_in_parent = fixed;
    out.action.degree = static_cast<int>(fixed.size());
    out.action.table.resize(W.group.order(), std::vector<int>(fixed.size()));
    for (int w = 0; w < W.group.order(); ++w) {
        int n = W.rep_in_parent[w];
        for (std::size_t i = 0; i < fixed.size(); ++i) {
            // n normalizes H, so n.x is again H-fixed
            out.action.table[w][i] = pos[A.act(n, fixed[i])];
        }
    }
    for (int x : fixed) out.action.point_labels.push_back(A.point_labels[x]);
    validate_action(W.group, out.action, "weyl fixed-point action");
    return out;
}

}  // namespace orbisect
