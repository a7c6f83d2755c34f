#ifndef ORBISECT_FG_ABELIAN_HPP
#define ORBISECT_FG_ABELIAN_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace orbisect {

/// A finitely generated abelian group in canonical form: free rank plus
/// invariant factors d_1 | d_2 | ... | d_k, each >= 2. Canonical form is
/// unique, so equality is structural.
struct FGAbelianGroup {
    int free_rank = 0;
    std::vector<std::int64_t> torsion;

    bool operator==(const FGAbelianGroup&) const = default;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    /// |torsion part|; 1 when there is none.
    std::int64_t torsion_order() const;

    /// "0", "Z^3", "Z/2 + Z/6", "Z^2 + Z/4", ...
    std::string to_string() const;
};

/// Canonical group generated freely by `rank` copies of Z plus one cyclic
/// factor per entry of `cyclic_orders` (entries 1 are dropped, the rest are
/// refolded into an invariant-factor chain).
FGAbelianGroup fg_abelian_from_cyclic(int rank, const std::vector<std::int64_t>& cyclic_orders);

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);

}  // namespace orbisect

#endif
