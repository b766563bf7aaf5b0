#include <doctest.h>

#include "conelab/baselocus.hpp"
#include "conelab/oracle.hpp"
#include "conelab/sweep.hpp"

using namespace conelab;

namespace {

OracleConfig fast_cfg(int samples = 2) {
    OracleConfig cfg;
    cfg.samples = samples;
    cfg.seed = 20240618;
    return cfg;
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("config validation and environment") {
    OracleConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    CHECK(is_prime_u64(kDefaultPrime));
    cfg.prime = 1000;  // composite
    CHECK_THROWS_AS(cfg.validate(), OracleError);

    setenv("CONELAB_SAMPLES", "5", 1);
    setenv("CONELAB_SEED", "99", 1);
    auto env_cfg = OracleConfig::from_env();
    CHECK(env_cfg.samples == 5);
    CHECK(env_cfg.seed == 99);
    unsetenv("CONELAB_SAMPLES");
    unsetenv("CONELAB_SEED");

    setenv("CONELAB_PRIME", "notanumber", 1);
    CHECK_THROWS_AS(OracleConfig::from_env(), OracleError);
    unsetenv("CONELAB_PRIME");
}

TEST_CASE("point sampling: determinism, distinctness, Vandermonde") {
    auto cfg = fast_cfg();
    auto pts = sample_points(4, 7, cfg, 0);
    auto again = sample_points(4, 7, cfg, 0);
    CHECK(pts.parameters == again.parameters);
    CHECK(pts.points.size() == 7);
    for (std::size_t i = 0; i < pts.parameters.size(); ++i)
        for (std::size_t j = i + 1; j < pts.parameters.size(); ++j)
            CHECK(pts.parameters[i] != pts.parameters[j]);
    auto other = sample_points(4, 7, cfg, 1);
    CHECK(pts.parameters != other.parameters);

    // any 5 of the 7 points span: check a few 5x5 Vandermonde dets mod p
    PrimeField F(cfg.prime);
    for_each_subset(7, 5, [&](const std::vector<int>& I) {
        std::uint64_t det = F.one();
        for (std::size_t a = 0; a < I.size(); ++a)
            for (std::size_t b = a + 1; b < I.size(); ++b)
                det = F.mul(det, F.to_mont(F.sub(
                                     pts.parameters[static_cast<std::size_t>(I[b]) - 1] %
                                         cfg.prime,
                                     pts.parameters[static_cast<std::size_t>(I[a]) - 1] %
                                         cfg.prime)));
        CHECK(det != 0);
    });
}

TEST_CASE("conditions matrix shapes") {
    auto cfg = fast_cfg();
    auto pts = sample_points(2, 5, cfg);
    auto M = conditions_matrix(LinearSystemSpec(2, 2, {1, 1, 1, 1, 1}), pts);
    CHECK(M.cols == 6);
    CHECK(M.rows.size() == 5);
    CHECK(rank_mod_p(M) == 5);

    // multiplicity-0 points contribute no rows
    auto M0 = conditions_matrix(LinearSystemSpec(2, 2, {1, 1, 0, 0, 0}), pts);
    CHECK(M0.rows.size() == 2);

    auto pts4 = sample_points(4, 7, cfg);
    auto M4 = conditions_matrix(LinearSystemSpec(4, 3, {2, 2, 2, 2, 2, 2, 2}), pts4);
    CHECK(M4.cols == 35);
    CHECK(M4.rows.size() == 35);
    CHECK(rank_mod_p(M4) == 34);  // the Alexander-Hirschowitz exceptional cubic
}

TEST_CASE("rank of identity and zero matrices") {
    FpMatrix eye{101, 6, {}};
    for (int i = 0; i < 6; ++i) {
        std::vector<std::uint64_t> row(6, 0);
        row[static_cast<std::size_t>(i)] = 1;
        eye.rows.push_back(row);
    }
    CHECK(rank_mod_p(eye) == 6);
    FpMatrix zero{101, 4, {std::vector<std::uint64_t>(4, 0), std::vector<std::uint64_t>(4, 0)}};
    CHECK(rank_mod_p(zero) == 0);
}

TEST_CASE("row echelon handles dependent rows mod p") {
    PrimeField F(97);
    RowEchelon ech(F, 3);
    auto mont = [&](std::initializer_list<std::uint64_t> vals) {
        std::vector<std::uint64_t> row;
        for (auto v : vals) row.push_back(F.to_mont(v));
        return row;
    };
    CHECK(ech.add_row(mont({1, 2, 3})));
    CHECK(ech.add_row(mont({4, 5, 6})));
    CHECK_FALSE(ech.add_row(mont({5, 7, 9})));   // sum of the first two
    CHECK(ech.reduces_to_zero(mont({94, 91, 88})));  // -3, -6, -9 mod 97
    CHECK(ech.add_row(mont({0, 0, 1})));
    CHECK(ech.rank() == 3);
}

TEST_CASE("oracle dimensions of the small reference systems") {
    auto cfg = fast_cfg();
    CHECK(oracle_dim(LinearSystemSpec(2, 2, {1, 1, 1, 1, 1}), cfg).dim == 1);
    CHECK(oracle_dim(LinearSystemSpec(4, 3, {2, 2, 2, 2, 2, 2, 2}), cfg).dim == 1);
    CHECK(oracle_dim(LinearSystemSpec(2, 4, {2, 2, 2, 2, 2}), cfg).dim == 1);
    CHECK(oracle_dim(LinearSystemSpec(2, 3, {2, 2, 1, 1, 1}), cfg).dim == 1);
    CHECK(oracle_dim(LinearSystemSpec(1, 4, {2, 1, 1, 0}), cfg).dim == 1);  // P^1 sanity
    CHECK(oracle_dim(LinearSystemSpec(3, 0, {}), cfg).dim == 1);            // constants
}

TEST_CASE("oracle result metadata") {
    auto cfg = fast_cfg(3);
    auto res = oracle_dim(LinearSystemSpec(2, 3, {2, 2, 1, 1, 1}), cfg);
    CHECK(res.cols == 10);
    CHECK(res.agreed);
    REQUIRE(res.per_sample.size() == 3);
    for (const auto& rec : res.per_sample) {
        CHECK(rec.prime == cfg.prime);
        CHECK(rec.dim >= res.dim);  // semicontinuity: samples only overshoot
        CHECK(rec.rank + rec.dim == res.cols);
    }
    auto res2 = oracle_dim(LinearSystemSpec(2, 3, {2, 2, 1, 1, 1}), cfg);
    CHECK(res2.per_sample[0].seed == res.per_sample[0].seed);  // reproducible
    CHECK(res2.dim == res.dim);
}

TEST_CASE("emptiness checks match the facet criterion") {
    auto cfg = fast_cfg();
    CHECK_FALSE(is_effective_oracle(LinearSystemSpec(4, 3, {3, 2, 2, 2, 2, 2, 2}), cfg));
    CHECK_FALSE(is_effective_oracle(LinearSystemSpec(2, 3, {3, 3, 1, 1, 1}), cfg));
    CHECK(is_effective_oracle(LinearSystemSpec(2, 3, {2, 2, 1, 1, 1}), cfg));
    CHECK_FALSE(is_effective_oracle(LinearSystemSpec(2, 2, {2, 2, 1, 0, 0}), cfg));
    CHECK(is_effective_oracle(LinearSystemSpec(2, 2, {2, 1, 1, 0, 0}), cfg));
}

TEST_CASE("multiplicity probes on the small references") {
    auto cfg = fast_cfg();
    CHECK(multiplicity_probe(LinearSystemSpec(2, 2, {1, 1, 1, 1, 1}), JoinCycle::curve(), cfg) == 1);
    CHECK(multiplicity_probe(LinearSystemSpec(4, 3, {2, 2, 2, 2, 2, 2, 2}), JoinCycle::curve(), cfg) == 2);
    CHECK(multiplicity_probe(LinearSystemSpec(2, 4, {2, 2, 2, 2, 2}), JoinCycle::curve(), cfg) == 2);
    // a cycle not in the base locus probes to 0
    CHECK(multiplicity_probe(LinearSystemSpec(2, 5, {2, 2, 2, 2, 2}), JoinCycle::curve(), cfg) == 0);
    // linear cycle: the line through two double points of a quartic
    CHECK(multiplicity_probe(LinearSystemSpec(2, 4, {3, 3, 1, 1, 1}),
                             JoinCycle(MultiIndex({1, 2}), 0), cfg) == 2);
}

TEST_CASE("probe rejects empty systems and bad cycles") {
    auto cfg = fast_cfg();
    CHECK_THROWS_AS(multiplicity_probe(LinearSystemSpec(2, 3, {3, 3, 1, 1, 1}),
                                       JoinCycle::curve(), cfg),
                    OracleError);
    CHECK_THROWS_AS(multiplicity_probe(LinearSystemSpec(2, 3, {1, 1, 1, 1, 1}),
                                       JoinCycle(MultiIndex({1, 2}), 1), cfg),
                    std::invalid_argument);  // r = 3 > n-1
}

TEST_CASE("probe confirms the k_join value of every table row") {
    auto cfg = fast_cfg();
    const LinearSystemSpec L(4, 6, {4, 4, 3, 3, 3, 2, 2});
    REQUIRE(is_effective_system(L));
    InterpolationOracle oracle(L, cfg);
    for (const auto& e : base_locus_table(L)) {
        CHECK(oracle.probe(e.cycle) == e.k);
    }
}

TEST_CASE("oracle dimension is invariant along reductions") {
    auto cfg = fast_cfg();
    SplitMix64 rng(41);
    int done = 0;
    while (done < 8) {
        const int n = 2 + static_cast<int>(rng.below(2));
        const long long d = 1 + static_cast<long long>(rng.below(5));
        std::vector<long long> m(static_cast<std::size_t>(n) + 3);
        for (auto& v : m) v = static_cast<long long>(rng.below(static_cast<std::uint64_t>(d) + 1));
        LinearSystemSpec L(n, d, std::move(m));
        MultiIndex J = default_pivot(L);
        if (cremona_c(L, J) <= 0) continue;
        LinearSystemSpec out = clamp_negative(cremona_transform(L, J));
        if (out.d() < 0) continue;
        CHECK(oracle_dim(L, cfg).dim == oracle_dim(out, cfg).dim);
        ++done;
    }
    // cone reduction
    CHECK(oracle_dim(LinearSystemSpec(3, 2, {2, 1, 1, 1, 1, 0}), cfg).dim ==
          oracle_dim(LinearSystemSpec(2, 2, {1, 1, 1, 1, 0}), cfg).dim);
}

TEST_CASE("oracle matches ldim with at most n+2 points") {
    auto cfg = fast_cfg();
    SplitMix64 rng(43);
    int done = 0;
    while (done < 12) {
        const int n = 2 + static_cast<int>(rng.below(2));
        const long long d = 1 + static_cast<long long>(rng.below(5));
        std::vector<long long> m(static_cast<std::size_t>(n) + 2);
        for (auto& v : m) v = static_cast<long long>(rng.below(static_cast<std::uint64_t>(d) + 1));
        LinearSystemSpec L(n, d, std::move(m));
        CHECK(Int(static_cast<long>(oracle_dim(L, cfg).dim)) == ldim(L));
        ++done;
    }
}

TEST_CASE("reduce_for_oracle shrinks the parity family members") {
    bool empty = false;
    LinearSystemSpec big(6, 16, std::vector<long long>(9, 12));
    LinearSystemSpec reduced = reduce_for_oracle(big, &empty);
    CHECK_FALSE(empty);
    CHECK(reduced.n() <= 2);
    auto cfg = fast_cfg();
    CHECK(oracle_dim_reduced(big, cfg) == 1);  // n even: one section

    // provable emptiness through degree collapse
    bool gone = false;
    reduce_for_oracle(LinearSystemSpec(2, 3, {2, 2, 2, 2, 2}), &gone);
    CHECK(gone);
    CHECK(oracle_dim_reduced(LinearSystemSpec(2, 3, {2, 2, 2, 2, 2}), cfg) == 0);

    // cone steps can bottom out in P^1; the oracle still finishes the job
    CHECK(oracle_dim_reduced(LinearSystemSpec(2, 3, {3, 3, 3, 0, 0}), cfg) == 0);
}

TEST_CASE("oracle guards") {
    OracleConfig tiny;
    tiny.prime = 31;
    CHECK_THROWS_AS(oracle_dim(LinearSystemSpec(2, 40, {1, 1, 1, 1, 1}), tiny), OracleError);
    OracleConfig small_cap = fast_cfg();
    small_cap.max_cols = 10;
    CHECK_THROWS_AS(oracle_dim(LinearSystemSpec(2, 5, {1, 1, 1, 1, 1}), small_cap), OracleError);
}

TEST_SUITE_END();
