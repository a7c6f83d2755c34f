#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <utility>
#include <vector>

namespace orbisect {

using bigint = boost::multiprecision::cpp_int;

/// Sparse integer matrix, exact arithmetic.
struct IntegerMatrix {
    int rows = 0, cols = 0;
    std::map<std::pair<int, int>, bigint> entries;  // nonzero only

    void add(int r, int c, const bigint& v);
    bigint get(int r, int c) const;
};

/// Invariant factors d_1 | d_2 | ... (all positive); with_certificates
/// additionally returns dense unimodular U (rows x rows) and V (cols x cols)
/// with U*M*V = diag(factors). Certificates are meant for small matrices.
struct SNFResult {
    std::vector<bigint> factors;
    std::vector<std::vector<bigint>> U, V;  // empty unless requested
};
SNFResult smith_normal_form(const IntegerMatrix& M, bool with_certificates = false);

/// Rank over the rationals = number of invariant factors.
int integer_rank(const IntegerMatrix& M);

/// Check U*M*V = diag(factors) and |det U| = |det V| = 1.
bool verify_snf_certificates(const IntegerMatrix& M, const SNFResult& S);

}  // namespace orbisect
