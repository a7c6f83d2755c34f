#include "orbisect/homology.hpp"

#include <algorithm>

#include "orbisect/errors.hpp"

namespace orbisect {

int TruncatedNerve::index_of(int dim, const std::vector<int>& s) const {
    const auto& level = simplices[dim];
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return -1;
    return static_cast<int>(it - level.begin());
}

TruncatedNerve nerve(const FiniteGroupoid& G, int d, long budget) {
    if (d < 1) throw std::invalid_argument("nerve: max dimension must be >= 1");
    TruncatedNerve N;
    N.max_dim = d;
    N.simplices.resize(d + 1);
    long total = 0;
    auto charge = [&](long k) {
        total += k;
        if (total > budget) throw SizeBudgetExceeded(budget, "nerve simplex budget exceeded");
    };
    charge(G.n_objects);
    N.simplices[0].reserve(G.n_objects);
    for (int x = 0; x < G.n_objects; ++x) N.simplices[0].push_back({x});

    std::vector<char> is_unit(G.n_arrows, 0);
    for (int x = 0; x < G.n_objects; ++x) is_unit[G.unit[x]] = 1;
    std::vector<int> nonunit;
    for (int a = 0; a < G.n_arrows; ++a)
        if (!is_unit[a]) nonunit.push_back(a);
    // arrows sorted by index already; strings built in lex order stay sorted
    charge(static_cast<long>(nonunit.size()));
    N.simplices[1].reserve(nonunit.size());
    for (int a : nonunit) N.simplices[1].push_back({a});

    std::vector<std::vector<int>> out_arrows(G.n_objects);  // non-unit arrows by source
    for (int a : nonunit) out_arrows[G.src[a]].push_back(a);

    for (int n = 2; n <= d; ++n) {
        const auto& prev = N.simplices[n - 1];
        auto& cur = N.simplices[n];
        for (const auto& s : prev) {
            int end = G.tgt[s.back()];
            for (int a : out_arrows[end]) {
                charge(1);
                std::vector<int> t = s;
                t.push_back(a);
                cur.push_back(std::move(t));
            }
        }
        // prev lex-sorted and extensions appended in ascending arrow order
    }
    return N;
}

int nerve_face(const FiniteGroupoid& G, const TruncatedNerve& N, int n, int i, int simplex) {
    const auto& s = N.simplices[n][simplex];
    if (n == 1) {
        // faces are objects: d_0 = target, d_1 = source
        return i == 0 ? G.tgt[s[0]] : G.src[s[0]];
    }
    std::vector<int> f;
    f.reserve(n - 1);
    if (i == 0) {
        f.assign(s.begin() + 1, s.end());
    } else if (i == n) {
        f.assign(s.begin(), s.end() - 1);
    } else {
        f.assign(s.begin(), s.end());
        int composite = G.compose(f[i], f[i - 1]);
        if (composite == G.unit[G.src[f[i - 1]]]) return -1;  // degenerate
        f[i - 1] = composite;
        f.erase(f.begin() + i);
    }
    int idx = N.index_of(n - 1, f);
    return idx;
}

bigint simplex_count_with_degeneracies(const TruncatedNerve& N, int n) {
    // sum_k C(n,k) * nondeg_k
    bigint total = 0;
    for (int k = 0; k <= std::min(n, N.max_dim); ++k) {
        bigint binom = 1;
        for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
        total += binom * N.count(k);
    }
    return total;
}

std::vector<IntegerMatrix> chain_complex(const FiniteGroupoid& G, const TruncatedNerve& N) {
    std::vector<IntegerMatrix> out;
    for (int n = 1; n <= N.max_dim; ++n) {
        IntegerMatrix M;
        M.rows = N.count(n - 1);
        M.cols = N.count(n);
        for (int s = 0; s < N.count(n); ++s) {
            int sign = 1;
            for (int i = 0; i <= n; ++i, sign = -sign) {
                int f = nerve_face(G, N, n, i, s);
                if (f >= 0) M.add(f, s, sign);
            }
        }
        out.push_back(std::move(M));
    }
    return out;
}

namespace {

FGAbelianGroup homology_of_connected(const FiniteGroupoid& C, int n, long budget) {
    TruncatedNerve N = nerve(C, n + 1, budget);
    auto chains = chain_complex(C, N);
    const int c_n = N.count(n);
    int r_n = n >= 1 ? integer_rank(chains[n - 1]) : 0;
    SNFResult top = smith_normal_form(chains[n]);
    int r_top = static_cast<int>(top.factors.size());
    int free_rank = c_n - r_n - r_top;
    std::vector<std::int64_t> torsion;
    for (const auto& f : top.factors)
        if (f > 1) torsion.push_back(static_cast<std::int64_t>(f));
    FGAbelianGroup out;
    out.free_rank = free_rank;
    out.torsion = std::move(torsion);  // SNF factors already form a divisor chain
    return out;
}

}  // namespace

FGAbelianGroup homology(const FiniteGroupoid& G, int n, long budget) {
    if (n < 0) throw DegreeOutOfRange(n, "homology degree must be >= 0");
    FGAbelianGroup total;
    for (const auto& comp : components(G)) {
        Subgroupoid sub = full_subgroupoid(G, comp);
        total = direct_sum(total, homology_of_connected(sub.gpd, n, budget));
    }
    return total;
}

}  // namespace orbisect
