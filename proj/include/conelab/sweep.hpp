#pragma once

/**
 * @file sweep.hpp
 * @brief Verification harness: compares the formula layer (effectivity
 *        membership and predicted dimension) against the rank oracle over
 *        families of systems, producing machine-readable reports.
 *
 * Systems are Cremona/cone-reduced before the oracle by default.  Both moves
 * preserve the dimension, and several families contain members whose direct
 * conditions matrix is far beyond dense elimination (e.g. tens of thousands
 * of columns) while their reduced forms are tiny.
 */

#include <atomic>
#include <fstream>
#include <thread>

#include "conelab/cremona.hpp"
#include "conelab/formulas.hpp"
#include "conelab/oracle.hpp"
#include "conelab/specio.hpp"
#include "conelab/version.hpp"

namespace conelab {

/// Dimension-preserving shrink: single Cremona steps (with clamping)
/// interleaved with cone reduction whenever a point reaches full
/// multiplicity, until the system is Cremona reduced with no such point.
/// `provably_empty` is set when the degree drops below zero along the way.
/// Terminates: cone steps lower n, Cremona steps lower d.
inline LinearSystemSpec reduce_for_oracle(const LinearSystemSpec& input, bool* provably_empty) {
    require_linear_system(input, "reduce_for_oracle");
    if (provably_empty) *provably_empty = false;
    LinearSystemSpec sys = input;
    while (sys.n() >= 2) {
        if (sys.d() >= 1) {
            ConeReduction cone = cone_reduce(sys);
            if (cone.removed > 0) {
                sys = cone.system;
                continue;
            }
        }
        MultiIndex J = default_pivot(sys);
        if (cremona_c(sys, J) <= 0) break;
        sys = clamp_negative(cremona_transform(sys, J));
        if (sys.d() < 0) {
            if (provably_empty) *provably_empty = true;
            return sys;
        }
    }
    return sys;
}

/// oracle_dim through the reduction above; exact for the same reason the
/// reductions are dimension-preserving.
inline long long oracle_dim_reduced(const LinearSystemSpec& L, const OracleConfig& cfg = {}) {
    bool empty = false;
    LinearSystemSpec reduced = reduce_for_oracle(L, &empty);
    if (empty) return 0;
    return oracle_dim(reduced, cfg).dim;
}

struct SweepOptions {
    OracleConfig oracle;
    TruncationPolicy trunc;
    bool reduce_before_oracle = true;
};

struct SweepRow {
    LinearSystemSpec system;
    Int vdim, ldim, sldim, predicted;
    long long oracle_dim = 0;
    bool effective_formula = false;
    bool effective_oracle = false;
    bool agree = false;
};

struct SweepReport {
    std::string family;
    std::vector<SweepRow> rows;
    OracleConfig oracle;
    bool all_agree() const {
        return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.agree; });
    }
};

inline SweepRow sweep_one(const LinearSystemSpec& L, const SweepOptions& opt) {
    SweepRow row{L, vdim(L), ldim(L, opt.trunc), sldim(L, opt.trunc), predicted_dim(L, opt.trunc)};
    row.effective_formula = is_effective_system(L);
    row.oracle_dim = opt.reduce_before_oracle ? oracle_dim_reduced(L, opt.oracle)
                                              : oracle_dim(L, opt.oracle).dim;
    row.effective_oracle = row.oracle_dim >= 1;
    row.agree = (row.predicted == Int(static_cast<long>(row.oracle_dim))) &&
                (row.effective_formula == row.effective_oracle);
    return row;
}

/// Runs all rows, optionally on a small worker pool; output keeps input order.
inline SweepReport run_sweep(std::string family, const std::vector<LinearSystemSpec>& systems,
                             const SweepOptions& opt) {
    SweepReport report;
    report.family = std::move(family);
    report.oracle = opt.oracle;
    report.rows.resize(systems.size(), SweepRow{LinearSystemSpec(1, 0, {}), 0, 0, 0, 0});
    const int workers = std::max(1, std::min<int>(opt.oracle.parallelism,
                                                  static_cast<int>(systems.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < systems.size(); ++i)
            report.rows[i] = sweep_one(systems[i], opt);
        return report;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= systems.size()) break;
                report.rows[i] = sweep_one(systems[i], opt);
            }
        });
    }
    for (auto& t : pool) t.join();
    return report;
}

// ---- families ------------------------------------------------------------

/// L_{2t, a(t+1)}((at)^{2t+3}): the linear systems of multiples of the
/// divisorial secant variety; each has exactly one element.
inline std::vector<LinearSystemSpec> family_secant(int t_max, int a_max) {
    std::vector<LinearSystemSpec> out;
    for (int t = 1; t <= t_max; ++t)
        for (int a = 1; a <= a_max; ++a)
            out.emplace_back(2 * t, static_cast<long long>(a) * (t + 1),
                             std::vector<long long>(static_cast<std::size_t>(2 * t) + 3,
                                                    static_cast<long long>(a) * t));
    return out;
}

/// L_{n, b(n+2)}((bn)^{n+3}) for b <= b_max, plus L_{n,d}(n^{n+3}) for
/// d <= d_max, over 2 <= n <= n_max.
inline std::vector<LinearSystemSpec> family_homog(int n_max, int b_max, long long d_max) {
    std::vector<LinearSystemSpec> out;
    for (int n = 2; n <= n_max; ++n)
        for (int b = 1; b <= b_max; ++b)
            out.emplace_back(n, static_cast<long long>(b) * (n + 2),
                             std::vector<long long>(static_cast<std::size_t>(n) + 3,
                                                    static_cast<long long>(b) * n));
    for (int n = 2; n <= n_max; ++n)
        for (long long d = 1; d <= d_max; ++d)
            out.emplace_back(n, d, std::vector<long long>(static_cast<std::size_t>(n) + 3, n));
    return out;
}

/// Exhaustive (n, d, m) box with 0 <= d <= d_max and multiplicities drawn
/// from sorted vectors with entries in [0, min(m_max, d)] (the dimension is
/// symmetric in the points, so sorted representatives lose nothing).  When
/// the box exceeds `limit`, a deterministic seeded subsample is kept.
inline std::vector<LinearSystemSpec> family_grid(int n, long long d_max, long long m_max,
                                                 std::size_t limit, std::uint64_t seed) {
    std::vector<LinearSystemSpec> out;
    const int points = n + 3;
    std::vector<long long> mults(static_cast<std::size_t>(points));
    for (long long d = 0; d <= d_max; ++d) {
        const long long cap = std::min(m_max, d);
        // multisets as non-increasing vectors
        std::function<void(int, long long)> rec = [&](int pos, long long hi) {
            if (pos == points) {
                out.emplace_back(n, d, mults);
                return;
            }
            for (long long v = hi; v >= 0; --v) {
                mults[static_cast<std::size_t>(pos)] = v;
                rec(pos + 1, v);
            }
        };
        rec(0, cap);
    }
    if (out.size() > limit) {
        // seeded Fisher-Yates prefix, then restore input order
        std::vector<std::size_t> idx(out.size());
        std::iota(idx.begin(), idx.end(), 0);
        SplitMix64 rng(mix_seed(seed, 0x67726964ULL));
        for (std::size_t i = 0; i < limit; ++i) {
            const std::size_t j = i + rng.below(idx.size() - i);
            std::swap(idx[i], idx[j]);
        }
        idx.resize(limit);
        std::sort(idx.begin(), idx.end());
        std::vector<LinearSystemSpec> kept;
        kept.reserve(limit);
        for (std::size_t i : idx) kept.push_back(std::move(out[i]));
        out = std::move(kept);
    }
    return out;
}

// ---- report output --------------------------------------------------------

inline const char* kSweepCsvHeader =
    "system,n,d,m,vdim,ldim,sldim,predicted_dim,oracle_dim,effective_formula,effective_oracle,agree";

inline void write_csv(const SweepReport& report, std::ostream& os) {
    os << kSweepCsvHeader << '\n';
    for (const auto& r : report.rows) {
        os << '"' << print_system(r.system) << '"' << ',' << r.system.n() << ',' << r.system.d()
           << ',' << '"';
        const auto& m = r.system.mults();
        for (std::size_t i = 0; i < m.size(); ++i) os << (i ? ";" : "") << m[i];
        os << '"' << ',' << r.vdim.get_str() << ',' << r.ldim.get_str() << ','
           << r.sldim.get_str() << ',' << r.predicted.get_str() << ',' << r.oracle_dim << ','
           << (r.effective_formula ? 1 : 0) << ',' << (r.effective_oracle ? 1 : 0) << ','
           << (r.agree ? 1 : 0) << '\n';
    }
}

inline nlohmann::json report_json(const SweepReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"system", system_json(r.system)},
                        {"vdim", int_json(r.vdim)},
                        {"ldim", int_json(r.ldim)},
                        {"sldim", int_json(r.sldim)},
                        {"predicted_dim", int_json(r.predicted)},
                        {"oracle_dim", r.oracle_dim},
                        {"effective_formula", r.effective_formula},
                        {"effective_oracle", r.effective_oracle},
                        {"agree", r.agree}});
    }
    return nlohmann::json{{"family", report.family},
                          {"rows", rows},
                          {"meta",
                           {{"seed", report.oracle.seed},
                            {"prime", report.oracle.prime},
                            {"samples", report.oracle.samples},
                            {"version", kVersion}}}};
}

}  // namespace conelab
