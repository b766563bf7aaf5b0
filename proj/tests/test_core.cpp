#include <doctest.h>

#include <set>

#include "conelab/core.hpp"

using namespace conelab;

TEST_SUITE_BEGIN("core");

TEST_CASE("binomial convention") {
    CHECK(binom_or_zero(4, 2) == 6);
    CHECK(binom_or_zero(1, 2) == 0);
    CHECK(binom_or_zero(14, 6) == 3003);
    CHECK(binom_or_zero(-3, 2) == 0);
    CHECK(binom_or_zero(0, 0) == 1);
    CHECK_THROWS_AS(binom_or_zero(4, -1), std::invalid_argument);
}

TEST_CASE("binomial grows past 64 bits") {
    Int big = binom_or_zero(200, 100);
    CHECK(big > Int("18446744073709551615"));  // > 2^64 - 1
}

TEST_CASE("Pascal identity under the zero convention") {
    for (long long a = 1; a <= 40; ++a)
        for (long long b = 1; b <= 12; ++b)
            CHECK(binom_or_zero(a, b) == binom_or_zero(a - 1, b) + binom_or_zero(a - 1, b - 1));
}

TEST_CASE("system padding and accessors") {
    LinearSystemSpec L(2, 4, {2, 2});
    CHECK(L.mults().size() == 5);
    CHECK(L.mult(1) == 2);
    CHECK(L.mult(3) == 0);
    CHECK(L.mult_sum() == 4);
    CHECK(L.positive_count() == 2);
    CHECK_THROWS_AS(LinearSystemSpec(2, 1, {1, 1, 1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("divisor class is exactly n+3 wide, any sign") {
    DivisorClass D(2, -1, {3, -2});
    CHECK(D.m().size() == 5);
    CHECK(D.m(2) == -2);
    CHECK_THROWS_AS(DivisorClass(2, 0, {0, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("multi-index normalizes and rejects duplicates") {
    MultiIndex I({3, 1, 2});
    CHECK(I.indices() == std::vector<int>({1, 2, 3}));
    CHECK(I.contains(2));
    CHECK_FALSE(I.contains(4));
    CHECK_THROWS_AS(MultiIndex({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(MultiIndex({0, 1}), std::invalid_argument);
    CHECK(MultiIndex{}.to_string() == "{}");
    CHECK(I.to_string() == "{1,2,3}");
}

TEST_CASE("join cycle dimension") {
    CHECK(JoinCycle::empty().r() == -1);
    CHECK(JoinCycle::curve().r() == 1);
    CHECK(JoinCycle(MultiIndex({1, 2}), 1).r() == 3);
    CHECK(JoinCycle(MultiIndex{}, 2).is_divisorial(4));
    CHECK_THROWS_AS(JoinCycle(MultiIndex{}, -1), std::invalid_argument);
}

TEST_CASE("enumeration counts for n=2") {
    auto all = enumerate_join_cycles(
        2, [](int size, int t) { return t <= 1 && size <= 2 - 2 * t; });
    CHECK(all.size() == 17);  // 1 + 5 + 10 at t=0, plus 1 at t=1

    auto divisorial = enumerate_join_cycles(2, [](int size, int t) { return size == 2 - 2 * t; });
    CHECK(divisorial.size() == 11);  // 10 at t=0, 1 at t=1
}

TEST_CASE("enumeration is empty when no admissible indices exist") {
    auto none = enumerate_join_cycles(1, [](int size, int t) { return t >= 1 && size <= 1 - 2 * t; });
    CHECK(none.empty());
}

TEST_CASE("enumeration has no duplicates, fixed order, correct r") {
    auto cycles = enumerate_join_cycles(4, [](int size, int t) { return size <= 4 - 2 * t; });
    std::set<std::pair<int, std::vector<int>>> seen;
    int last_t = 0;
    for (const auto& c : cycles) {
        CHECK(c.r() == c.I.size() + 2 * c.t - 1);
        CHECK(seen.insert({c.t, c.I.indices()}).second);
        CHECK(c.t >= last_t);  // t ascending
        last_t = c.t;
    }
    auto again = enumerate_join_cycles(4, [](int size, int t) { return size <= 4 - 2 * t; });
    REQUIRE(again.size() == cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) CHECK(again[i] == cycles[i]);
}

TEST_SUITE_END();
