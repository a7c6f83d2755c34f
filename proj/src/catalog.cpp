#include "orbisect/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "orbisect/errors.hpp"

namespace orbisect {

namespace {

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
    // (a*b)(i) = a(b(i))
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

std::string perm_label(const std::vector<int>& p) {
    // cycle notation, fixed points dropped; identity prints as "e"
    std::vector<char> seen(p.size(), 0);
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        out += '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
            j = static_cast<std::size_t>(p[j]);
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group: n must be >= 1");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
        labels[a] = a == 0 ? "e" : "r" + std::to_string(a);
    }
    return FiniteGroup::from_table(table, labels, "C" + std::to_string(n));
}

std::vector<std::vector<int>> permutation_elements(int degree,
                                                   const std::vector<std::vector<int>>& gens,
                                                   const std::string& where) {
    if (degree < 1) throw std::invalid_argument("permutation_elements: degree must be >= 1");
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != degree)
            throw AxiomViolation(where, "generator degree mismatch",
                                 "expected " + std::to_string(degree) + " entries");
        std::vector<char> hit(degree, 0);
        for (int v : g) {
            if (v < 0 || v >= degree || hit[v])
                throw AxiomViolation(where, "generator is not a permutation",
                                     "value " + std::to_string(v));
            hit[v] = 1;
        }
    }
    std::vector<int> id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;

    std::vector<std::vector<int>> elems = {id};
    std::map<std::vector<int>, int> index = {{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gens) {
            auto next = compose_perm(elems[i], g);
            if (index.emplace(next, static_cast<int>(elems.size())).second)
                elems.push_back(std::move(next));
            if (elems.size() > 100000)
                throw AxiomViolation(where, "permutation group too large", "closure exceeded 100000");
        }
    }
    return elems;
}

FiniteGroup from_permutations(int degree, const std::vector<std::vector<int>>& gens,
                              const std::string& where) {
    auto elems = permutation_elements(degree, gens, where);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = perm_label(elems[a]);
        for (int b = 0; b < n; ++b) table[a][b] = index.at(compose_perm(elems[a], elems[b]));
    }
    return FiniteGroup::from_table(table, labels, where);
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("symmetric_group: need 1 <= n <= 5");
    if (n == 1) return FiniteGroup::from_table({{0}}, {"e"}, "S1");
    std::vector<int> transposition(n), cycle(n);
    for (int i = 0; i < n; ++i) {
        transposition[i] = i;
        cycle[i] = (i + 1) % n;
    }
    std::swap(transposition[0], transposition[1]);
    return from_permutations(n, {transposition, cycle}, "S" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
    if (n < 1) throw std::invalid_argument("dihedral_group: n must be >= 1");
    // elements r^a s^b, b in {0,1}; r^a s r^c s = r^{a-c}
    const int order = 2 * n;
    auto enc = [n](int a, int b) { return ((a % n + n) % n) + n * b; };
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    std::vector<std::string> labels(order);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < 2; ++b) {
            int x = enc(a, b);
            labels[x] = (a == 0 && b == 0) ? "e"
                        : (b == 0 ? "r" + std::to_string(a)
                                  : (a == 0 ? "s" : "r" + std::to_string(a) + "s"));
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < 2; ++d) {
                    // (r^a s^b)(r^c s^d) = r^{a + (-1)^b c} s^{b+d}
                    int e = b == 0 ? a + c : a - c;
                    table[x][enc(c, d)] = enc(e, (b + d) % 2);
                }
        }
    return FiniteGroup::from_table(table, labels, "D" + std::to_string(n));
}

FiniteGroup quaternion_group() {
    // {1,-1,i,-i,j,-j,k,-k} encoded as sign*unit; index = unit*2 + (sign<0)
    // units: 0=1, 1=i, 2=j, 3=k
    auto mul_units = [](int a, int b, int& sign) {
        // returns unit of product, sign multiplied in
        static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        sign *= sgn[a][b];
        return unit[a][b];
    };
    auto enc = [](int u, int s) { return u * 2 + (s < 0 ? 1 : 0); };
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    for (int ua = 0; ua < 4; ++ua)
        for (int sa : {1, -1})
            for (int ub = 0; ub < 4; ++ub)
                for (int sb : {1, -1}) {
                    int sign = sa * sb;
                    int u = mul_units(ua, ub, sign);
                    table[enc(ua, sa)][enc(ub, sb)] = enc(u, sign);
                }
    return FiniteGroup::from_table(table, labels, "Q8");
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
    const int n = A.order() * B.order();
    auto enc = [&](int a, int b) { return a * B.order() + b; };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < A.order(); ++a)
        for (int b = 0; b < B.order(); ++b) {
            labels[enc(a, b)] = "(" + A.label(a) + "," + B.label(b) + ")";
            for (int c = 0; c < A.order(); ++c)
                for (int d = 0; d < B.order(); ++d)
                    table[enc(a, b)][enc(c, d)] = enc(A.mul(a, c), B.mul(b, d));
        }
    return FiniteGroup::from_table(table, labels, "product");
}

}  // namespace orbisect
