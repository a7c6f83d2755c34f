#include "orbisect/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "orbisect/errors.hpp"

namespace orbisect {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                    std::vector<std::string> labels,
                                    const std::string& where) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw AxiomViolation(where, "group must be nonempty", "");
    FiniteGroup G;
    G.n_ = n;
    G.mult_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n)
            throw AxiomViolation(where, "multiplication table row has wrong length",
                                 "row " + std::to_string(a));
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n)
                throw AxiomViolation(where, "table entry out of range",
                                     "(" + std::to_string(a) + "," + std::to_string(b) + ") = " +
                                         std::to_string(v));
            G.mult_[a * n + b] = v;
        }
    }

    // Latin square: rows and columns are permutations.
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int v = G.mult_[a * n + b];
            if (seen[v])
                throw AxiomViolation(where, "row is not a permutation",
                                     "row " + std::to_string(a) + " repeats " + std::to_string(v));
            seen[v] = 1;
        }
    }
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < n; ++a) {
            int v = G.mult_[a * n + b];
            if (seen[v])
                throw AxiomViolation(where, "column is not a permutation",
                                     "column " + std::to_string(b) + " repeats " + std::to_string(v));
            seen[v] = 1;
        }
    }

    // Two-sided identity.
    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n; ++x)
            if (G.mult_[e * n + x] != x || G.mult_[x * n + e] != x) { ok = false; break; }
        if (ok) id = e;
    }
    if (id < 0) throw AxiomViolation(where, "no two-sided identity", "");
    G.id_ = id;

    // Associativity, full triple loop.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = G.mult_[a * n + b];
            for (int c = 0; c < n; ++c)
                if (G.mult_[ab * n + c] != G.mult_[a * n + G.mult_[b * n + c]])
                    throw AxiomViolation(where, "multiplication is not associative",
                                         "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                             std::to_string(c) + ")");
        }

    // Two-sided inverses.
    G.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (G.mult_[a * n + b] == id && G.mult_[b * n + a] == id) { G.inv_[a] = b; break; }
        if (G.inv_[a] < 0)
            throw AxiomViolation(where, "element has no two-sided inverse", std::to_string(a));
    }

    G.elem_order_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        int x = a, k = 1;
        while (x != id) { x = G.mult_[x * n + a]; ++k; }
        G.elem_order_[a] = k;
    }

    if (labels.empty()) {
        labels.resize(n);
        for (int a = 0; a < n; ++a) labels[a] = "g" + std::to_string(a);
        labels[id] = "e";
    } else if (static_cast<int>(labels.size()) != n) {
        throw AxiomViolation(where, "label list has wrong length", "");
    }
    G.labels_ = std::move(labels);
    return G;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::order_profile() const {
    std::vector<int> p = elem_order_;
    std::sort(p.begin(), p.end());
    return p;
}

bool is_subgroup(const FiniteGroup& G, const Subgroup& s) {
    std::vector<char> in(G.order(), 0);
    for (int x : s.elems) {
        if (x < 0 || x >= G.order() || in[x]) return false;
        in[x] = 1;
    }
    if (s.elems.empty() || !in[G.identity()]) return false;
    for (int a : s.elems) {
        if (!in[G.inv(a)]) return false;
        for (int b : s.elems)
            if (!in[G.mul(a, b)]) return false;
    }
    return std::is_sorted(s.elems.begin(), s.elems.end());
}

void validate_subgroup(const FiniteGroup& G, const Subgroup& s, const std::string& where) {
    std::vector<char> in(G.order(), 0);
    for (int x : s.elems) {
        if (x < 0 || x >= G.order())
            throw AxiomViolation(where, "element out of range", std::to_string(x));
        in[x] = 1;
    }
    if (!in[G.identity()]) throw AxiomViolation(where, "identity missing", "");
    for (int a : s.elems) {
        if (!in[G.inv(a)])
            throw AxiomViolation(where, "not closed under inverse", std::to_string(a));
        for (int b : s.elems)
            if (!in[G.mul(a, b)])
                throw AxiomViolation(where, "not closed under multiplication",
                                     std::to_string(a) + "*" + std::to_string(b));
    }
}

Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<char> in(G.order(), 0);
    std::vector<int> frontier = {G.identity()};
    in[G.identity()] = 1;
    for (int g : gens)
        if (!in[g]) { in[g] = 1; frontier.push_back(g); }
    for (std::size_t i = 0; i < frontier.size(); ++i)
        for (std::size_t j = 0; j < frontier.size(); ++j) {
            int p = G.mul(frontier[i], frontier[j]);
            if (!in[p]) { in[p] = 1; frontier.push_back(p); }
        }
    Subgroup s;
    for (int x = 0; x < G.order(); ++x)
        if (in[x]) s.elems.push_back(x);
    return s;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
    // Closure BFS: extend each known subgroup by one outside element.
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    std::vector<Subgroup> work;
    Subgroup triv{{G.identity()}};
    seen.insert(triv.elems);
    work.push_back(triv);
    while (!work.empty()) {
        Subgroup h = std::move(work.back());
        work.pop_back();
        out.push_back(h);
        std::vector<char> in(G.order(), 0);
        for (int x : h.elems) in[x] = 1;
        for (int g = 0; g < G.order(); ++g) {
            if (in[g]) continue;
            std::vector<int> gens = h.elems;
            gens.push_back(g);
            Subgroup bigger = generated_subgroup(G, gens);
            if (seen.insert(bigger.elems).second) work.push_back(bigger);
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elems < b.elems;
    });
    return out;
}

Subgroup conjugate_subgroup(const FiniteGroup& G, int g, const Subgroup& h) {
    Subgroup c;
    c.elems.reserve(h.elems.size());
    for (int x : h.elems) c.elems.push_back(G.conj(g, x));
    std::sort(c.elems.begin(), c.elems.end());
    return c;
}

std::vector<std::vector<Subgroup>> conjugacy_classes_of_subgroups(const FiniteGroup& G) {
    auto subs = all_subgroups(G);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < subs.size(); ++i) index[subs[i].elems] = static_cast<int>(i);
    std::vector<char> used(subs.size(), 0);
    std::vector<std::vector<Subgroup>> classes;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (used[i]) continue;
        std::set<std::vector<int>> orbit;
        orbit.insert(subs[i].elems);
        for (int g = 0; g < G.order(); ++g) orbit.insert(conjugate_subgroup(G, g, subs[i]).elems);
        std::vector<Subgroup> cls;
        for (const auto& e : orbit) {
            used[index.at(e)] = 1;
            cls.push_back(Subgroup{e});
        }
        classes.push_back(std::move(cls));  // set iteration: lex-least member first
    }
    std::sort(classes.begin(), classes.end(),
              [](const std::vector<Subgroup>& a, const std::vector<Subgroup>& b) {
                  if (a[0].order() != b[0].order()) return a[0].order() < b[0].order();
                  return a[0].elems < b[0].elems;
              });
    return classes;
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
    validate_subgroup(G, H, "normalizer argument");
    Subgroup n;
    for (int g = 0; g < G.order(); ++g)
        if (conjugate_subgroup(G, g, H).elems == H.elems) n.elems.push_back(g);
    return n;
}

EmbeddedGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H) {
    validate_subgroup(G, H, "subgroup_as_group argument");
    const int m = H.order();
    std::vector<int> back(G.order(), -1);
    for (int i = 0; i < m; ++i) back[H.elems[i]] = i;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        labels[i] = G.label(H.elems[i]);
        for (int j = 0; j < m; ++j) table[i][j] = back[G.mul(H.elems[i], H.elems[j])];
    }
    return {FiniteGroup::from_table(table, std::move(labels)), H.elems};
}

QuotientGroup quotient_group(const FiniteGroup& G, const Subgroup& N) {
    validate_subgroup(G, N, "quotient_group argument");
    for (int g = 0; g < G.order(); ++g)
        if (conjugate_subgroup(G, g, N).elems != N.elems)
            throw AxiomViolation("quotient_group argument", "subgroup is not normal",
                                 "conjugator " + std::to_string(g));
    QuotientGroup q;
    q.to_quotient.assign(G.order(), -1);
    for (int g = 0; g < G.order(); ++g) {
        if (q.to_quotient[g] >= 0) continue;
        int c = static_cast<int>(q.coset_rep.size());
        q.coset_rep.push_back(g);
        for (int h : N.elems) q.to_quotient[G.mul(g, h)] = c;
    }
    const int m = static_cast<int>(q.coset_rep.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        labels[i] = "[" + G.label(q.coset_rep[i]) + "]";
        for (int j = 0; j < m; ++j)
            table[i][j] = q.to_quotient[G.mul(q.coset_rep[i], q.coset_rep[j])];
    }
    q.group = FiniteGroup::from_table(table, std::move(labels));
    return q;
}

WeylGroup weyl_with_reps(const FiniteGroup& G, const Subgroup& H) {
    Subgroup N = normalizer(G, H);
    EmbeddedGroup NG = subgroup_as_group(G, N);
    std::vector<int> pos(G.order(), -1);
    for (int i = 0; i < NG.group.order(); ++i) pos[NG.to_parent[i]] = i;
    Subgroup Hn;
    for (int x : H.elems) Hn.elems.push_back(pos[x]);
    std::sort(Hn.elems.begin(), Hn.elems.end());
    QuotientGroup q = quotient_group(NG.group, Hn);
    WeylGroup w;
    w.group = q.group;
    w.rep_in_parent.resize(q.group.order());
    for (int i = 0; i < q.group.order(); ++i) w.rep_in_parent[i] = NG.to_parent[q.coset_rep[i]];
    return w;
}

FiniteGroup weyl(const FiniteGroup& G, const Subgroup& H) { return weyl_with_reps(G, H).group; }

Subgroup commutator_subgroup(const FiniteGroup& G) {
    std::vector<int> comms;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            comms.push_back(G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return generated_subgroup(G, comms);
}

FGAbelianGroup abelian_invariants(const FiniteGroup& G) {
    // Element-order counts determine a finite abelian group: for each prime p,
    // log_p #{a : a^{p^k} = e} - log_p #{a : a^{p^(k-1)} = e} counts the cyclic
    // factors of order >= p^k.
    std::vector<std::int64_t> cyclic;
    std::int64_t n = G.order();
    std::vector<std::int64_t> primes;
    {
        std::int64_t m = n;
        for (std::int64_t p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                primes.push_back(p);
                while (m % p == 0) m /= p;
            }
        if (m > 1) primes.push_back(m);
    }
    for (std::int64_t p : primes) {
        auto count_killed = [&](std::int64_t pk) {
            int c = 0;
            for (int a = 0; a < G.order(); ++a)
                if (pk % G.element_order(a) == 0) ++c;
            return c;
        };
        std::vector<int> at_least;  // at_least[k-1] = # factors of order >= p^k
        std::int64_t pk = 1;
        int prev = 1;
        while (true) {
            pk *= p;
            int cur = count_killed(pk);
            if (cur == prev) break;
            int m = 0;
            std::int64_t ratio = cur / prev;
            while (ratio > 1) { ratio /= p; ++m; }
            at_least.push_back(m);
            prev = cur;
        }
        for (std::size_t k = 0; k < at_least.size(); ++k) {
            int exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
            std::int64_t ppow = 1;
            for (std::size_t j = 0; j <= k; ++j) ppow *= p;
            for (int c = 0; c < exactly; ++c) cyclic.push_back(ppow);
        }
    }
    return fg_abelian_from_cyclic(0, cyclic);
}

FGAbelianGroup abelianization(const FiniteGroup& G) {
    FiniteGroup ab = quotient_group(G, commutator_subgroup(G)).group;
    return abelian_invariants(ab);
}

std::vector<int> small_generating_set(const FiniteGroup& G) {
    std::vector<int> gens;
    Subgroup cur{{G.identity()}};
    while (cur.order() < G.order()) {
        // pick the outside element generating the largest extension
        int best = -1, best_size = -1;
        std::vector<char> in(G.order(), 0);
        for (int x : cur.elems) in[x] = 1;
        for (int g = 0; g < G.order(); ++g) {
            if (in[g]) continue;
            auto gens2 = gens;
            gens2.push_back(g);
            int size = generated_subgroup(G, gens2).order();
            if (size > best_size) { best_size = size; best = g; }
            if (size == G.order()) break;
        }
        gens.push_back(best);
        cur = generated_subgroup(G, gens);
    }
    return gens;
}

namespace {

// Try to extend the partial map determined by gen images to a full
// homomorphism H -> K; returns the map if it is a bijection.
bool close_homomorphism(const FiniteGroup& H, const FiniteGroup& K,
                        const std::vector<int>& gens, const std::vector<int>& images,
                        std::vector<int>& map) {
    map.assign(H.order(), -1);
    map[H.identity()] = K.identity();
    std::vector<int> known = {H.identity()};
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (map[gens[i]] >= 0) {
            if (map[gens[i]] != images[i]) return false;
            continue;
        }
        map[gens[i]] = images[i];
        known.push_back(gens[i]);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t sz = known.size();
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = 0; j < sz; ++j) {
                int p = H.mul(known[i], known[j]);
                int q = K.mul(map[known[i]], map[known[j]]);
                if (map[p] < 0) {
                    map[p] = q;
                    known.push_back(p);
                    grew = true;
                } else if (map[p] != q) {
                    return false;
                }
            }
    }
    if (static_cast<int>(known.size()) != H.order()) return false;  // gens do not generate
    std::vector<char> hit(K.order(), 0);
    for (int a = 0; a < H.order(); ++a) {
        if (hit[map[a]]) return false;
        hit[map[a]] = 1;
    }
    // airtight: multiplicative on every pair
    for (int a = 0; a < H.order(); ++a)
        for (int b = 0; b < H.order(); ++b)
            if (map[H.mul(a, b)] != K.mul(map[a], map[b])) return false;
    return true;
}

bool iso_backtrack(const FiniteGroup& H, const FiniteGroup& K, const std::vector<int>& gens,
                   std::vector<int>& images, std::size_t depth, std::vector<int>& map) {
    if (depth == gens.size()) return close_homomorphism(H, K, gens, images, map);
    int g = gens[depth];
    for (int k = 0; k < K.order(); ++k) {
        if (K.element_order(k) != H.element_order(g)) continue;
        images[depth] = k;
        // cheap consistency: partial closure fails fast inside close_homomorphism,
        // so just recurse; generating sets are tiny at this scale.
        if (iso_backtrack(H, K, gens, images, depth + 1, map)) return true;
    }
    return false;
}

}  // namespace

std::vector<int> find_isomorphism(const FiniteGroup& H, const FiniteGroup& K, int order_cap) {
    if (H.order() > order_cap) throw OrderCapExceeded(H.order(), order_cap);
    if (K.order() > order_cap) throw OrderCapExceeded(K.order(), order_cap);
    if (H.order() != K.order()) return {};
    if (H.order_profile() != K.order_profile()) return {};
    if (H.is_abelian() != K.is_abelian()) return {};
    if (H.order() == 1) return {K.identity()};
    auto gens = small_generating_set(H);
    std::vector<int> images(gens.size());
    std::vector<int> map;
    if (iso_backtrack(H, K, gens, images, 0, map)) return map;
    return {};
}

bool are_isomorphic(const FiniteGroup& H, const FiniteGroup& K, int order_cap) {
    if (H.order() > order_cap) throw OrderCapExceeded(H.order(), order_cap);
    if (K.order() > order_cap) throw OrderCapExceeded(K.order(), order_cap);
    if (H.order() != K.order()) return false;
    if (H.order_profile() != K.order_profile()) return false;
    if (H.is_abelian() != K.is_abelian()) return false;
    if (H.is_abelian()) return true;  // profiles classify finite abelian groups
    return !find_isomorphism(H, K, order_cap).empty();
}

}  // namespace orbisect
