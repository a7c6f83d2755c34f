#ifndef ORBISECT_GROUP_HPP
#define ORBISECT_GROUP_HPP

#include <string>
#include <vector>

#include "orbisect/fg_abelian.hpp"

namespace orbisect {

inline constexpr int kDefaultOrderCap = 64;

/// A finite group given by its full multiplication table on indices
/// 0..order-1. Immutable after construction; construction validates the
/// table (Latin square, two-sided identity and inverses, associativity).
class FiniteGroup {
public:
    FiniteGroup() = default;  // the trivial group

    /// `where` names the group in axiom-violation messages.
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                  std::vector<std::string> labels = {},
                                  const std::string& where = "group");

    int order() const { return n_; }
    int mul(int a, int b) const { return mult_[a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return id_; }
    int element_order(int a) const { return elem_order_[a]; }
    int conj(int g, int a) const { return mul(mul(g, a), inv_[g]); }

    bool is_abelian() const;
    /// Sorted multiset of element orders; an isomorphism invariant.
    std::vector<int> order_profile() const;

    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && mult_ == o.mult_; }

private:
    int n_ = 1;
    std::vector<int> mult_ = {0};
    std::vector<int> inv_ = {0};
    std::vector<int> elem_order_ = {1};
    int id_ = 0;
    std::vector<std::string> labels_ = {"e"};
};

/// A subgroup of an ambient group, stored as the sorted list of element
/// indices. The ambient group is passed alongside wherever it is needed;
/// the sorted list is the canonical label used for hashing and ordering.
struct Subgroup {
    std::vector<int> elems;

    int order() const { return static_cast<int>(elems.size()); }
    bool operator==(const Subgroup&) const = default;
    auto operator<=>(const Subgroup&) const = default;
};

/// Throws AxiomViolation unless `s` contains the identity and is closed
/// under multiplication and inverse in G.
void validate_subgroup(const FiniteGroup& G, const Subgroup& s, const std::string& where = "subgroup");
bool is_subgroup(const FiniteGroup& G, const Subgroup& s);

/// Closure of a set of elements under multiplication; always a subgroup.
Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens);

/// All subgroups of G, duplicate-free, sorted by (order, elements).
/// The list is closed under conjugation.
std::vector<Subgroup> all_subgroups(const FiniteGroup& G);

Subgroup conjugate_subgroup(const FiniteGroup& G, int g, const Subgroup& h);

/// Partition of all_subgroups(G) into conjugacy classes. Each class lists
/// its members sorted, with the lexicographically least one first; classes
/// are sorted by their representatives.
std::vector<std::vector<Subgroup>> conjugacy_classes_of_subgroups(const FiniteGroup& G);

/// Largest subgroup of G normalizing H. H must be a subgroup of G.
Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);

/// A subgroup repackaged as a standalone group. to_parent maps the new
/// element indices back into G.
struct EmbeddedGroup {
    FiniteGroup group;
    std::vector<int> to_parent;
};
EmbeddedGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H);

/// G / N for N normal in G, with coset labels. to_quotient maps each
/// element of G to the index of its coset.
struct QuotientGroup {
    FiniteGroup group;
    std::vector<int> coset_rep;     // quotient element -> representative in G
    std::vector<int> to_quotient;   // G element -> quotient element
};
QuotientGroup quotient_group(const FiniteGroup& G, const Subgroup& N);

/// The Weyl group N_G(H) / H.
FiniteGroup weyl(const FiniteGroup& G, const Subgroup& H);

/// Weyl group together with a coset representative in G for each element.
struct WeylGroup {
    FiniteGroup group;
    std::vector<int> rep_in_parent;  // weyl element -> element of N_G(H) <= G
};
WeylGroup weyl_with_reps(const FiniteGroup& G, const Subgroup& H);

Subgroup commutator_subgroup(const FiniteGroup& G);

/// G / [G,G] in canonical invariant-factor form.
FGAbelianGroup abelianization(const FiniteGroup& G);

/// Invariant factors of a group that is already abelian.
FGAbelianGroup abelian_invariants(const FiniteGroup& G);

/// Generator-image backtracking with element-order pruning. Throws
/// OrderCapExceeded when either order exceeds `order_cap`.
bool are_isomorphic(const FiniteGroup& H, const FiniteGroup& K, int order_cap = kDefaultOrderCap);

/// The witnessing bijection H -> K, empty if none exists.
std::vector<int> find_isomorphism(const FiniteGroup& H, const FiniteGroup& K,
                                  int order_cap = kDefaultOrderCap);

/// A small generating set found greedily (empty for the trivial group).
std::vector<int> small_generating_set(const FiniteGroup& G);

}  // namespace orbisect

#endif
