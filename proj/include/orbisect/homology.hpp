#pragma once

#include <vector>

#include "orbisect/fg_abelian.hpp"
#include "orbisect/groupoid.hpp"
#include "orbisect/sectors.hpp"
#include "orbisect/snf.hpp"

namespace orbisect {

/// Nerve truncated at max_dim, nondegenerate simplices only: composable
/// arrow strings with no unit arrow. Dimension 0 holds singleton object
/// strings. Strings are lexicographically sorted within each dimension.
struct TruncatedNerve {
    int max_dim = 0;
    std::vector<std::vector<std::vector<int>>> simplices;  // [dim][index] = string

    int count(int dim) const { return static_cast<int>(simplices[dim].size()); }
    int index_of(int dim, const std::vector<int>& s) const;  // -1 if absent
};

TruncatedNerve nerve(const FiniteGroupoid& G, int d, long budget = kDefaultSimplexBudget);

/// i-th face of an n-simplex: outer faces drop an end arrow, inner faces
/// compose. Returns -1 when the face is degenerate (unit arrow appears).
int nerve_face(const FiniteGroupoid& G, const TruncatedNerve& N, int n, int i, int simplex);

/// Total n-simplex count including degenerate ones:
/// sum over k of C(n,k) * #nondegenerate k-simplices.
bigint simplex_count_with_degeneracies(const TruncatedNerve& N, int n);

/// Boundary matrices of the normalized chain complex, ∂_1 .. ∂_max_dim;
/// result[n-1] maps dimension n to n-1.
std::vector<IntegerMatrix> chain_complex(const FiniteGroupoid& G, const TruncatedNerve& N);

/// H_n of the classifying space, computed per component from the d = n+1
/// truncation of the nerve.
FGAbelianGroup homology(const FiniteGroupoid& G, int n, long budget = kDefaultSimplexBudget);

}  // namespace orbisect
