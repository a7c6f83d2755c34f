#include "orbisect/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace orbisect {

void IntegerMatrix::add(int r, int c, const bigint& v) {
    if (v == 0) return;
    auto key = std::make_pair(r, c);
    auto it = entries.find(key);
    if (it == entries.end()) {
        entries.emplace(key, v);
    } else {
        it->second += v;
        if (it->second == 0) entries.erase(it);
    }
}

bigint IntegerMatrix::get(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? bigint(0) : it->second;
}

namespace {

/// Dense textbook SNF with smallest-pivot selection; tracks U and V when
/// requested. Terminates because each corner pivot weakly decreases and
/// strictly decreases whenever a division leaves a remainder.
struct DenseSNF {
    int rows, cols;
    std::vector<std::vector<bigint>> m;
    bool certs;
    std::vector<std::vector<bigint>> U, V;

    DenseSNF(int r, int c, bool with_certs) : rows(r), cols(c), certs(with_certs) {
        m.assign(rows, std::vector<bigint>(cols, 0));
        if (certs) {
            U.assign(rows, std::vector<bigint>(rows, 0));
            V.assign(cols, std::vector<bigint>(cols, 0));
            for (int i = 0; i < rows; ++i) U[i][i] = 1;
            for (int j = 0; j < cols; ++j) V[j][j] = 1;
        }
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        std::swap(m[a], m[b]);
        if (certs) std::swap(U[a], U[b]);
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (auto& row : m) std::swap(row[a], row[b]);
        if (certs)
            for (auto& row : V) std::swap(row[a], row[b]);
    }
    void negate_row(int a) {
        for (auto& v : m[a]) v = -v;
        if (certs)
            for (auto& v : U[a]) v = -v;
    }
    // row a -= q * row b
    void row_sub(int a, int b, const bigint& q) {
        if (q == 0) return;
        for (int j = 0; j < cols; ++j) m[a][j] -= q * m[b][j];
        if (certs)
            for (int j = 0; j < rows; ++j) U[a][j] -= q * U[b][j];
    }
    // col a -= q * col b
    void col_sub(int a, int b, const bigint& q) {
        if (q == 0) return;
        for (int i = 0; i < rows; ++i) m[i][a] -= q * m[i][b];
        if (certs)
            for (int i = 0; i < cols; ++i) V[i][a] -= q * V[i][b];
    }
    void row_add(int a, int b) {  // row a += row b
        for (int j = 0; j < cols; ++j) m[a][j] += m[b][j];
        if (certs)
            for (int j = 0; j < rows; ++j) U[a][j] += U[b][j];
    }

    std::vector<bigint> run() {
        int k = 0;
        const int bound = std::min(rows, cols);
        while (k < bound) {
            // smallest nonzero magnitude in the trailing submatrix
            int pi = -1, pj = -1;
            bigint best = 0;
            for (int i = k; i < rows; ++i)
                for (int j = k; j < cols; ++j) {
                    if (m[i][j] == 0) continue;
                    bigint mag = abs(m[i][j]);
                    if (pi < 0 || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break;  // trailing submatrix is zero
            swap_rows(k, pi);
            swap_cols(k, pj);
            if (m[k][k] < 0) negate_row(k);

            bool clean = true;
            for (int i = k + 1; i < rows; ++i) {
                if (m[i][k] == 0) continue;
                bigint q = m[i][k] / m[k][k];
                row_sub(i, k, q);
                if (m[i][k] != 0) clean = false;  // remainder: smaller pivot now exists
            }
            for (int j = k + 1; j < cols; ++j) {
                if (m[k][j] == 0) continue;
                bigint q = m[k][j] / m[k][k];
                col_sub(j, k, q);
                if (m[k][j] != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: pivot must divide the rest of the submatrix
            bool divides = true;
            for (int i = k + 1; i < rows && divides; ++i)
                for (int j = k + 1; j < cols; ++j)
                    if (m[i][j] % m[k][k] != 0) {
                        row_add(k, i);  // pulls a non-multiple into row k
                        divides = false;
                        break;
                    }
            if (!divides) continue;
            ++k;
        }
        std::vector<bigint> factors;
        for (int i = 0; i < k; ++i)
            if (m[i][i] != 0) factors.push_back(m[i][i]);
        return factors;
    }
};

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& M, bool with_certificates) {
    SNFResult out;
    if (with_certificates) {
        DenseSNF d(M.rows, M.cols, true);
        for (const auto& [rc, v] : M.entries) d.m[rc.first][rc.second] = v;
        out.factors = d.run();
        out.U = std::move(d.U);
        out.V = std::move(d.V);
        return out;
    }

    // sparse unit-pivot peeling, then dense core
    std::vector<std::map<int, bigint>> row(M.rows);  // col -> value
    std::vector<std::map<int, std::size_t>> colrows(M.cols);  // col -> rows hitting it (count)
    for (const auto& [rc, v] : M.entries) {
        row[rc.first][rc.second] = v;
        ++colrows[rc.second][rc.first];
    }
    auto note_removed = [&](int r, int c) {
        auto it = colrows[c].find(r);
        if (it != colrows[c].end()) colrows[c].erase(it);
    };
    auto set_entry = [&](int r, int c, const bigint& v) {
        if (v == 0) {
            if (row[r].erase(c)) note_removed(r, c);
        } else {
            if (!row[r].count(c)) colrows[c][r] = 1;
            row[r][c] = v;
        }
    };

    int ones = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int r = 0; r < M.rows; ++r) {
            int pivot_col = -1;
            bigint pv;
            for (const auto& [c, v] : row[r])
                if (v == 1 || v == -1) {
                    pivot_col = c;
                    pv = v;
                    break;
                }
            if (pivot_col < 0) continue;
            // clear the pivot column with row operations
            std::vector<int> hitters;
            for (const auto& [rr, cnt] : colrows[pivot_col])
                if (rr != r) hitters.push_back(rr);
            for (int rr : hitters) {
                bigint q = row[rr][pivot_col] * pv;  // value / pv since pv = ±1
                // row rr -= q * row r
                for (const auto& [c, v] : row[r]) {
                    bigint nv = (row[rr].count(c) ? row[rr][c] : bigint(0)) - q * v;
                    set_entry(rr, c, nv);
                }
            }
            // row r now meets no other row in pivot_col; its other entries
            // die by column ops that touch nothing else
            std::vector<int> cols_to_clear;
            for (const auto& [c, v] : row[r])
                if (c != pivot_col) cols_to_clear.push_back(c);
            for (int c : cols_to_clear) set_entry(r, c, 0);
            set_entry(r, pivot_col, 0);
            ++ones;
            progress = true;
        }
    }

    // densify the surviving core
    std::vector<int> live_rows, live_cols;
    std::vector<char> col_live(M.cols, 0);
    for (int r = 0; r < M.rows; ++r)
        if (!row[r].empty()) {
            live_rows.push_back(r);
            for (const auto& [c, v] : row[r]) col_live[c] = 1;
        }
    for (int c = 0; c < M.cols; ++c)
        if (col_live[c]) live_cols.push_back(c);
    std::vector<int> col_pos(M.cols, -1);
    for (std::size_t i = 0; i < live_cols.size(); ++i) col_pos[live_cols[i]] = static_cast<int>(i);

    DenseSNF core(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()), false);
    for (std::size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& [c, v] : row[live_rows[i]]) core.m[i][col_pos[c]] = v;
    std::vector<bigint> core_factors = core.run();

    out.factors.assign(ones, bigint(1));
    out.factors.insert(out.factors.end(), core_factors.begin(), core_factors.end());
    return out;
}

int integer_rank(const IntegerMatrix& M) {
    return static_cast<int>(smith_normal_form(M).factors.size());
}

bool verify_snf_certificates(const IntegerMatrix& M, const SNFResult& S) {
    const int r = M.rows, c = M.cols;
    if (static_cast<int>(S.U.size()) != r || static_cast<int>(S.V.size()) != c) return false;
    // D = U * M * V
    std::vector<std::vector<bigint>> UM(r, std::vector<bigint>(c, 0));
    for (int i = 0; i < r; ++i)
        for (const auto& [rc, v] : M.entries) UM[i][rc.second] += S.U[i][rc.first] * v;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            bigint d = 0;
            for (int k = 0; k < c; ++k) d += UM[i][k] * S.V[k][j];
            bigint want = (i == j && i < static_cast<int>(S.factors.size())) ? S.factors[i]
                                                                             : bigint(0);
            if (d != want) return false;
        }
    // unimodularity via fraction-free Gaussian elimination (Bareiss determinant)
    auto det_abs_is_one = [](std::vector<std::vector<bigint>> a) {
        const int n = static_cast<int>(a.size());
        bigint prev = 1;
        for (int k = 0; k < n; ++k) {
            int p = -1;
            for (int i = k; i < n; ++i)
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return false;  // singular
            if (p != k) std::swap(a[p], a[k]);  // sign irrelevant for |det|
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j) {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            prev = a[k][k];
        }
        return abs(a[n - 1][n - 1]) == 1;
    };
    if (r > 0 && !det_abs_is_one(S.U)) return false;
    if (c > 0 && !det_abs_is_one(S.V)) return false;
    return true;
}

}  // namespace orbisect
