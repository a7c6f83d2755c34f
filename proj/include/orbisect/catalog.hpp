#pragma once

#include <string>
#include <vector>

#include "orbisect/group.hpp"

namespace orbisect {

// Standard construction kit for small finite groups.

FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group(int n);  // n <= 5 keeps tables tiny
FiniteGroup dihedral_group(int n);   // order 2n, n >= 1
FiniteGroup quaternion_group();      // Q8

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);

// Group generated by permutations of {0..degree-1}, each given in one-line
// notation. Throws AxiomViolation if a generator is not a permutation.
FiniteGroup from_permutations(int degree, const std::vector<std::vector<int>>& gens,
                              const std::string& where = "permutation group");

// The permutations realizing each element of from_permutations, in the same
// element order as the returned group.
std::vector<std::vector<int>> permutation_elements(int degree,
                                                   const std::vector<std::vector<int>>& gens,
                                                   const std::string& where = "permutation group");

}  // namespace orbisect
