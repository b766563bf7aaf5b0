#include <doctest.h>

#include "conelab/baselocus.hpp"
#include "conelab/cremona.hpp"
#include "conelab/rng.hpp"

using namespace conelab;

namespace {

const BaseLocusEntry* find_row(const std::vector<BaseLocusEntry>& table, int t, int size) {
    for (const auto& e : table)
        if (e.cycle.t == t && e.cycle.I.size() == size) return &e;
    return nullptr;
}

LinearSystemSpec random_effective(SplitMix64& rng, int n_max, long long d_max) {
    while (true) {
        const int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max - 1)));
        const long long d = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(d_max)));
        std::vector<long long> m(static_cast<std::size_t>(n) + 3);
        for (auto& v : m) v = static_cast<long long>(rng.below(static_cast<std::uint64_t>(d + 1)));
        LinearSystemSpec L(n, d, std::move(m));
        if (is_effective_system(L)) return L;
    }
}

}  // namespace

TEST_SUITE_BEGIN("baselocus");

TEST_CASE("the 8 symmetry classes of L_{6,8}(6^9)") {
    LinearSystemSpec L(6, 8, std::vector<long long>(9, 6));
    auto table = base_locus_table(L);
    REQUIRE(table.size() == 8);

    struct Expect {
        int t, size;
        long long k, count;
        bool divisorial;
    };
    const Expect expected[] = {
        {0, 2, 4, 36, false},  // lines
        {0, 3, 2, 84, false},  // planes
        {1, 0, 6, 1, false},   // the rational normal curve C
        {1, 1, 4, 9, false},   // J(p, C)
        {1, 2, 2, 36, false},  // J(L_ij, C)
        {2, 0, 4, 1, false},   // sigma_2
        {2, 1, 2, 9, false},   // J(p, sigma_2)
        {3, 0, 2, 1, true},    // sigma_3: r = 5 = n-1, the fixed hypersurface
    };
    for (const auto& e : expected) {
        const auto* row = find_row(table, e.t, e.size);
        REQUIRE_MESSAGE(row != nullptr, "missing row t=", e.t, " size=", e.size);
        CHECK(row->k == e.k);
        CHECK(row->count == e.count);
        CHECK(row->divisorial == e.divisorial);
        CHECK(row->cycle.r() == e.size + 2 * e.t - 1);
    }
}

TEST_CASE("inhomogeneous table rows of L_{4,10}(9,7^3,5^3)") {
    LinearSystemSpec L(4, 10, {9, 7, 7, 7, 5, 5, 5});
    auto table = base_locus_table(L);
    const auto* curve = find_row(table, 1, 0);
    REQUIRE(curve != nullptr);
    CHECK(curve->k == 5);
    bool found_jp1 = false;
    for (const auto& e : table)
        if (e.cycle.t == 1 && e.cycle.I == MultiIndex({1})) {
            found_jp1 = true;
            CHECK(e.k == 4);
        }
    CHECK(found_jp1);
}

TEST_CASE("empty table and the effectivity gate") {
    CHECK(base_locus_table(LinearSystemSpec(2, 3, {1, 1, 1, 1, 1})).empty());
    CHECK_THROWS_AS(base_locus_table(LinearSystemSpec(4, 3, {3, 2, 2, 2, 2, 2, 2})),
                    EffectivityError);
    try {
        base_locus_table(LinearSystemSpec(4, 3, {3, 2, 2, 2, 2, 2, 2}));
    } catch (const EffectivityError& e) {
        CHECK_FALSE(e.violated.empty());
        CHECK(std::string(e.what()).find("B_") != std::string::npos);
    }
}

TEST_CASE("divisorial fixed components") {
    auto ah = divisorial_fixed_components(LinearSystemSpec(4, 3, {2, 2, 2, 2, 2, 2, 2}));
    REQUIRE(ah.size() == 1);
    CHECK(ah[0].cycle.t == 2);
    CHECK(ah[0].cycle.I.empty());
    CHECK(ah[0].k == 1);

    auto conic = divisorial_fixed_components(LinearSystemSpec(2, 2, {1, 1, 1, 1, 1}));
    REQUIRE(conic.size() == 1);
    CHECK(conic[0].cycle.t == 1);
    CHECK(conic[0].k == 1);

    // Cremona reduced effective systems have none.
    SplitMix64 rng(31);
    int done = 0;
    while (done < 60) {
        LinearSystemSpec L = random_effective(rng, 5, 9);
        auto red = cremona_reduce(L);
        if (red.empty) continue;
        CHECK(divisorial_fixed_components(red.system).empty());
        ++done;
    }
}

TEST_CASE("residual removal") {
    LinearSystemSpec dbl_conic(2, 4, {2, 2, 2, 2, 2});
    auto comp = divisorial_fixed_components(dbl_conic);
    REQUIRE(comp.size() == 1);
    CHECK(comp[0].k == 2);
    auto res = residual_remove(dbl_conic, comp[0]);
    CHECK(res.system == LinearSystemSpec(2, 0, {0, 0, 0, 0, 0}));
    CHECK_FALSE(res.clamped);

    LinearSystemSpec ah(4, 3, {2, 2, 2, 2, 2, 2, 2});
    auto sigma = divisorial_fixed_components(ah);
    REQUIRE(sigma.size() == 1);
    auto res2 = residual_remove(ah, sigma[0]);
    CHECK(res2.system == LinearSystemSpec(4, 0, {0, 0, 0, 0, 0, 0, 0}));

    // k_C = 0: the conic is not a fixed component of L_{2,5}(2^5)
    BaseLocusEntry fake{JoinCycle::curve(), 1, true, 1};
    CHECK_THROWS_AS(residual_remove(LinearSystemSpec(2, 5, {2, 2, 2, 2, 2}), fake),
                    std::invalid_argument);
    // non-divisorial cycles are rejected
    BaseLocusEntry curve_row{JoinCycle::curve(), 6, false, 1};
    CHECK_THROWS_AS(residual_remove(LinearSystemSpec(6, 8, std::vector<long long>(9, 6)), curve_row),
                    std::invalid_argument);
}

TEST_CASE("table rows carry exact k_join values and positive k only") {
    SplitMix64 rng(32);
    for (int done = 0; done < 40;) {
        LinearSystemSpec L = random_effective(rng, 6, 10);
        for (const auto& e : base_locus_table(L)) {
            CHECK(e.k == k_join(L, e.cycle));
            CHECK(e.k > 0);
            CHECK(e.cycle.r() <= L.n() - 1);
            CHECK(e.cycle.r() >= 1);
        }
        ++done;
    }
}

TEST_CASE("monotonicity of containment multiplicities on effective systems") {
    // k_{sigma_{|I|+t}} <= k_{I,sigma_t} <= k_I and k_{I,sigma_t} <= k_{sigma_t}
    SplitMix64 rng(33);
    for (int done = 0; done < 60;) {
        LinearSystemSpec L = random_effective(rng, 6, 10);
        const int n = L.n();
        for (int t = 1; n - 2 * t >= 0; ++t) {
            for (int size = 1; size <= n - 2 * t; ++size) {
                for_each_subset(n + 3, size, [&](const std::vector<int>& I) {
                    MultiIndex mi(I);
                    const long long k_cone = k_join(L, JoinCycle(mi, t));
                    const long long k_vertex = k_join(L, JoinCycle(mi, 0));
                    const long long k_sec = k_join(L, JoinCycle::secant(t));
                    const long long k_big = k_join(L, JoinCycle::secant(size + t));
                    CHECK(k_cone <= k_vertex);
                    CHECK(k_cone <= k_sec);
                    CHECK(k_big <= k_cone);
                });
            }
        }
        ++done;
    }
}

TEST_CASE("k_C <= m_i <= d on effective systems") {
    SplitMix64 rng(34);
    for (int done = 0; done < 80;) {
        LinearSystemSpec L = random_effective(rng, 6, 10);
        const long long kC = k_rnc(L);
        for (long long mi : L.mults()) {
            CHECK(kC <= mi);
            CHECK(mi <= L.d());
        }
        ++done;
    }
}

TEST_CASE("secant geometry constants") {
    auto g42 = secant_geometry(4, 2);
    CHECK(g42.dim == 3);
    CHECK(g42.hypersurface);
    CHECK(g42.exact_mult_along_secant(1) == 2);
    CHECK(g42.degree == 3);  // sigma_2 in P^4 is the cubic L_{4,3}(2^7)

    auto g52 = secant_geometry(5, 2);
    CHECK(g52.dim == 3);
    CHECK(g52.degree == 6);
    CHECK(g52.mult_along_curve == 3);
    CHECK_FALSE(g52.hypersurface);
    CHECK_THROWS_AS(g52.exact_mult_along_secant(1), std::invalid_argument);

    auto g41 = secant_geometry(4, 1);
    CHECK(g41.dim == 1);
    CHECK(g41.degree == 4);
    CHECK(g41.mult_along_curve == 1);

    auto g63 = secant_geometry(6, 3);
    CHECK(g63.dim == 5);
    CHECK(g63.hypersurface);
    CHECK(g63.exact_mult_along_secant(1) == 3);
    CHECK(g63.mult_along_secant_lower(2) == binom_or_zero(2, 1));
}

TEST_SUITE_END();
