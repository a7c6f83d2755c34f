#include "orbisect/fg_abelian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orbisect {

std::int64_t FGAbelianGroup::torsion_order() const {
    std::int64_t n = 1;
    for (auto d : torsion) n *= d;
    return n;
}

std::string FGAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string s;
    if (free_rank == 1) s = "Z";
    else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (auto d : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + std::to_string(d);
    }
    return s;
}

namespace {

std::map<std::int64_t, std::vector<int>> prime_power_partitions(const std::vector<std::int64_t>& orders) {
    std::map<std::int64_t, std::vector<int>> parts;  // prime -> exponents, unsorted
    for (auto n : orders) {
        if (n <= 0) throw std::invalid_argument("cyclic order must be positive");
        for (std::int64_t p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            parts[p].push_back(e);
        }
        if (n > 1) parts[n].push_back(1);
    }
    return parts;
}

}  // namespace

FGAbelianGroup fg_abelian_from_cyclic(int rank, const std::vector<std::int64_t>& cyclic_orders) {
    if (rank < 0) throw std::invalid_argument("free rank must be nonnegative");
    auto parts = prime_power_partitions(cyclic_orders);
    std::size_t k = 0;
    for (auto& [p, es] : parts) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        k = std::max(k, es.size());
    }
    // Largest invariant factor first: combine the largest exponent of every prime.
    std::vector<std::int64_t> factors(k, 1);
    for (auto& [p, es] : parts)
        for (std::size_t i = 0; i < es.size(); ++i) {
            std::int64_t pe = 1;
            for (int j = 0; j < es[i]; ++j) pe *= p;
            factors[i] *= pe;
        }
    std::reverse(factors.begin(), factors.end());
    FGAbelianGroup g;
    g.free_rank = rank;
    g.torsion = std::move(factors);
    return g;
}

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    std::vector<std::int64_t> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return fg_abelian_from_cyclic(a.free_rank + b.free_rank, orders);
}

}  // namespace orbisect
