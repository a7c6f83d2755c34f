#include <doctest.h>

#include "orbisect/fg_abelian.hpp"

using namespace orbisect;

TEST_CASE("canonical form folds cyclic orders into an invariant-factor chain") {
    // Z/2 + Z/3 = Z/6
    auto g = fg_abelian_from_cyclic(0, {2, 3});
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<std::int64_t>{6});

    // Z/2 + Z/2 stays two factors
    g = fg_abelian_from_cyclic(0, {2, 2});
    CHECK(g.torsion == std::vector<std::int64_t>{2, 2});

    // Z/4 + Z/6 = Z/2 + Z/12
    g = fg_abelian_from_cyclic(0, {4, 6});
    CHECK(g.torsion == std::vector<std::int64_t>{2, 12});

    // ones are dropped
    g = fg_abelian_from_cyclic(2, {1, 1, 5});
    CHECK(g.free_rank == 2);
    CHECK(g.torsion == std::vector<std::int64_t>{5});

    // 2,4,8 is already a chain
    g = fg_abelian_from_cyclic(0, {8, 2, 4});
    CHECK(g.torsion == std::vector<std::int64_t>{2, 4, 8});
}

TEST_CASE("divisibility holds along the chain for assorted inputs") {
    const std::vector<std::vector<std::int64_t>> inputs = {
        {2, 3, 4, 5}, {6, 10, 15}, {9, 27, 3}, {12, 18}, {7, 7, 7}, {2, 2, 2, 2, 3}};
    for (const auto& in : inputs) {
        const auto g = fg_abelian_from_cyclic(0, in);
        std::int64_t prod_in = 1, prod_out = 1;
        for (auto v : in) prod_in *= v;
        for (auto v : g.torsion) prod_out *= v;
        CHECK(prod_in == prod_out);  // same group order
        for (std::size_t i = 1; i < g.torsion.size(); ++i)
            CHECK(g.torsion[i] % g.torsion[i - 1] == 0);
    }
}

TEST_CASE("direct sums recanonicalize") {
    const auto a = fg_abelian_from_cyclic(1, {2});
    const auto b = fg_abelian_from_cyclic(0, {3});
    const auto s = direct_sum(a, b);
    CHECK(s.free_rank == 1);
    CHECK(s.torsion == std::vector<std::int64_t>{6});
    CHECK(s.torsion_order() == 6);
}

TEST_CASE("names") {
    CHECK(FGAbelianGroup{}.to_string() == "0");
    CHECK(FGAbelianGroup{3, {}}.to_string() == "Z^3");
    CHECK(FGAbelianGroup{1, {}}.to_string() == "Z");
    CHECK(fg_abelian_from_cyclic(2, {4}).to_string() == "Z^2 + Z/4");
    CHECK(fg_abelian_from_cyclic(0, {2, 6}).to_string() == "Z/2 + Z/6");
}

TEST_CASE("equality is structural") {
    CHECK(fg_abelian_from_cyclic(0, {2, 3}) == fg_abelian_from_cyclic(0, {6}));
    CHECK(fg_abelian_from_cyclic(0, {4}) != fg_abelian_from_cyclic(0, {2, 2}));
    CHECK(FGAbelianGroup{}.is_trivial());
    CHECK_FALSE(fg_abelian_from_cyclic(1, {}).is_trivial());
}
