#pragma once

/**
 * @file oracle.hpp
 * @brief Independent Monte-Carlo ground truth for dimensions and base-locus
 *        multiplicities: place the n+3 points on the standard rational normal
 *        curve (1, u, ..., u^n) over a large prime field, assemble the
 *        interpolation conditions matrix from Hasse derivatives, and compute
 *        exact ranks by Gaussian elimination in Montgomery arithmetic.
 *
 * Any n+3 general points are projectively equivalent to points of the
 * standard curve, so this configuration is generic while making the curve,
 * its secants and their joins directly sampleable.  Specialization can only
 * drop the rank (raise the kernel), hence per-sample dimensions are upper
 * bounds for the true general-position dimension and the minimum over
 * samples is reported.
 *
 * With prime > d, vanishing to order m at a point is equivalent to the
 * vanishing of the order-(m-1) Hasse derivatives alone (Euler descent), so
 * each point of multiplicity m contributes exactly C(n+m-1, n) rows.  Orders
 * beyond d+1 already force the zero form and are clamped to d+1.
 */

#include <cstdlib>
#include <cstring>
#include <future>
#include <limits>
#include <map>
#include <memory>
#include <optional>

#include "conelab/core.hpp"
#include "conelab/fp.hpp"
#include "conelab/rng.hpp"

namespace conelab {

inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;  // 2^62 - 57
inline constexpr std::uint64_t kDefaultSeed = 0x1d9c2fb8a64e5c03ULL;

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleConfig {
    std::uint64_t prime = kDefaultPrime;
    int samples = 3;
    std::uint64_t seed = kDefaultSeed;
    int parallelism = 1;          // worker hint for independent samples
    std::size_t max_cols = 6000;  // dense-elimination guard

    /// Defaults overridden by CONELAB_PRIME / CONELAB_SAMPLES / CONELAB_SEED.
    static OracleConfig from_env() {
        OracleConfig cfg;
        auto read_u64 = [](const char* name, std::uint64_t& out) {
            const char* v = std::getenv(name);
            if (!v || !*v) return;
            char* end = nullptr;
            errno = 0;
            unsigned long long parsed = std::strtoull(v, &end, 10);
            if (errno != 0 || end == v || *end != '\0')
                throw OracleError(std::string("invalid value for ") + name);
            out = parsed;
        };
        read_u64("CONELAB_PRIME", cfg.prime);
        read_u64("CONELAB_SEED", cfg.seed);
        std::uint64_t samples = static_cast<std::uint64_t>(cfg.samples);
        read_u64("CONELAB_SAMPLES", samples);
        if (samples < 1 || samples > 64) throw OracleError("CONELAB_SAMPLES out of range");
        cfg.samples = static_cast<int>(samples);
        return cfg;
    }

    void validate() const {
        if (!is_prime_u64(prime)) throw OracleError("oracle prime is not prime");
        if (prime >= (1ULL << 62)) throw OracleError("oracle prime must be < 2^62");
        if (samples < 1) throw OracleError("oracle needs at least one sample");
        if (parallelism < 1) throw OracleError("oracle parallelism hint must be >= 1");
    }
};

/// s distinct parameters u_i and the points p_i = (1, u_i, ..., u_i^n) of the
/// standard rational normal curve, as plain residues mod prime.
struct PointConfiguration {
    int n = 0;
    std::uint64_t prime = 0;
    std::vector<std::uint64_t> parameters;
    std::vector<std::vector<std::uint64_t>> points;
};

namespace detail {

inline std::vector<std::uint64_t> curve_point(int n, std::uint64_t u, std::uint64_t prime) {
    std::vector<std::uint64_t> q(static_cast<std::size_t>(n) + 1);
    q[0] = 1;
    for (int i = 1; i <= n; ++i)
        q[static_cast<std::size_t>(i)] =
            static_cast<std::uint64_t>(static_cast<unsigned __int128>(q[static_cast<std::size_t>(i) - 1]) * u % prime);
    return q;
}

}  // namespace detail

/// Deterministic given (cfg.seed, sample_index): s distinct random curve
/// parameters, redrawn on collision.
inline PointConfiguration sample_points(int n, int s, const OracleConfig& cfg,
                                        int sample_index = 0) {
    if (n < 1 || s < 0) throw std::invalid_argument("sample_points: bad n or s");
    if (static_cast<std::uint64_t>(s) >= cfg.prime)
        throw OracleError("sample_points: prime too small to draw distinct parameters");
    PointConfiguration pc;
    pc.n = n;
    pc.prime = cfg.prime;
    SplitMix64 rng(mix_seed(cfg.seed, 0x706f696e74ULL + static_cast<std::uint64_t>(sample_index)));
    while (pc.parameters.size() < static_cast<std::size_t>(s)) {
        std::uint64_t u = rng.below(cfg.prime);
        if (std::find(pc.parameters.begin(), pc.parameters.end(), u) != pc.parameters.end())
            continue;
        pc.parameters.push_back(u);
    }
    for (std::uint64_t u : pc.parameters) pc.points.push_back(detail::curve_point(n, u, cfg.prime));
    return pc;
}

/// Dense matrix over F_prime in plain residues.
struct FpMatrix {
    std::uint64_t prime = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::uint64_t>> rows;
};

/// Extra vanishing constraint: multiplicity >= order at the given point.
struct ExtraConstraint {
    std::vector<std::uint64_t> point;  // n+1 plain residues
    int order = 1;
};

/// Row echelon accumulator over a Montgomery prime field.  Basis rows are
/// normalized to leading coefficient 1 and indexed by pivot column, so new
/// rows reduce with one fused multiply-subtract pass per basis row met.
class RowEchelon {
public:
    RowEchelon(const PrimeField& field, std::size_t cols)
        : F_(&field), cols_(cols), row_of_col_(cols, -1) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces `row` (Montgomery form) against the basis; inserts the
    /// normalized remainder if independent.  Returns true when rank grew.
    bool add_row(std::vector<std::uint64_t> row) {
        const auto pivot = reduce_in_place(row);
        if (!pivot) return false;
        const std::size_t c = *pivot;
        const std::uint64_t inv = F_->inv(row[c]);
        row[c] = F_->one();
        for (std::size_t j = c + 1; j < cols_; ++j) row[j] = F_->mul(row[j], inv);
        row_of_col_[c] = static_cast<std::int32_t>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    /// True when the row lies in the current row span (non-mutating).
    bool reduces_to_zero(std::vector<std::uint64_t> row) const {
        return !reduce_in_place(row).has_value();
    }

private:
    /// Eliminates `row` against the basis; returns its pivot column if a
    /// nonzero remainder is left, nullopt if it reduced to zero.
    std::optional<std::size_t> reduce_in_place(std::vector<std::uint64_t>& row) const {
        const PrimeField& F = *F_;
        for (std::size_t c = 0; c < cols_; ++c) {
            const std::uint64_t v = row[c];
            if (v == 0) continue;
            const std::int32_t r = row_of_col_[c];
            if (r < 0) return c;
            const std::uint64_t* basis = rows_[static_cast<std::size_t>(r)].data();
            std::uint64_t* out = row.data();
            row[c] = 0;
            for (std::size_t j = c + 1; j < cols_; ++j)
                out[j] = F.sub(out[j], F.mul(v, basis[j]));
        }
        return std::nullopt;
    }

    const PrimeField* F_;
    std::size_t cols_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::int32_t> row_of_col_;
};

namespace detail {

/// Exponent vectors of the degree-d monomials in n+1 variables, flattened
/// with stride n+1, in a fixed order (leading exponent descending).
inline void monomials(int n, long long d, std::vector<int>& out) {
    out.clear();
    std::vector<int> cur(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int, long long)> rec = [&](int var, long long left) {
        if (var == n) {
            cur[static_cast<std::size_t>(var)] = static_cast<int>(left);
            out.insert(out.end(), cur.begin(), cur.end());
            return;
        }
        for (long long e = left; e >= 0; --e) {
            cur[static_cast<std::size_t>(var)] = static_cast<int>(e);
            rec(var + 1, left - e);
        }
    };
    rec(0, d);
}

/// Builds interpolation rows for one field; owns the Montgomery constants,
/// the monomial list and a lazily grown Pascal-column table.
class ConditionsBuilder {
public:
    ConditionsBuilder(const PrimeField& field, int n, long long d)
        : F_(field), n_(n), d_(d) {
        monomials(n, d, exps_);
        cols_ = exps_.size() / (static_cast<std::size_t>(n) + 1);
        binom_cols_.push_back(std::vector<std::uint64_t>(static_cast<std::size_t>(d) + 1, F_.one()));
    }

    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return F_; }

    /// Montgomery power table q_i^e for 0 <= e <= d, stride d+1.
    std::vector<std::uint64_t> power_table(const std::vector<std::uint64_t>& point_plain) const {
        const std::size_t stride = static_cast<std::size_t>(d_) + 1;
        std::vector<std::uint64_t> tab(static_cast<std::size_t>(n_ + 1) * stride);
        for (int i = 0; i <= n_; ++i) {
            std::uint64_t base = F_.to_mont(point_plain[static_cast<std::size_t>(i)] % F_.prime());
            std::uint64_t acc = F_.one();
            for (long long e = 0; e <= d_; ++e) {
                tab[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(e)] = acc;
                acc = F_.mul(acc, base);
            }
        }
        return tab;
    }

    /// Row of the Hasse derivative D^beta evaluated at the tabulated point:
    /// entry over monomial alpha is prod_i C(alpha_i, beta_i) q_i^(alpha_i-beta_i).
    void hasse_row(const std::vector<std::uint64_t>& powtab, const std::vector<int>& beta,
                   std::vector<std::uint64_t>& out) {
        int maxb = 0;
        for (int b : beta) maxb = std::max(maxb, b);
        ensure_binom(maxb);
        const std::size_t stride = static_cast<std::size_t>(d_) + 1;
        out.assign(cols_, 0);
        const int vars = n_ + 1;
        for (std::size_t col = 0; col < cols_; ++col) {
            const int* e = exps_.data() + col * static_cast<std::size_t>(vars);
            std::uint64_t v = F_.one();
            bool vanish = false;
            for (int i = 0; i < vars; ++i) {
                const int a = e[i];
                const int b = beta[static_cast<std::size_t>(i)];
                if (a < b) {
                    vanish = true;
                    break;
                }
                if (b > 0) v = F_.mul(v, binom_cols_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]);
                v = F_.mul(v, powtab[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(a - b)]);
            }
            if (!vanish) out[col] = v;
        }
    }

    /// Visits every derivative multi-index |beta| = order (same order as the
    /// monomial enumeration of that degree).
    template <typename Fn>
    void for_each_derivative(int order, Fn&& fn) const {
        std::vector<int> flat;
        monomials(n_, order, flat);
        const std::size_t vars = static_cast<std::size_t>(n_) + 1;
        std::vector<int> beta(vars);
        for (std::size_t off = 0; off < flat.size(); off += vars) {
            std::copy(flat.begin() + static_cast<std::ptrdiff_t>(off),
                      flat.begin() + static_cast<std::ptrdiff_t>(off + vars), beta.begin());
            fn(const_cast<const std::vector<int>&>(beta));
        }
    }

private:
    void ensure_binom(int b_max) {
        // Column b of Pascal's triangle from column b-1: C(a,b) = C(a,b-1)(a-b+1)/b.
        while (static_cast<int>(binom_cols_.size()) <= b_max) {
            const int b = static_cast<int>(binom_cols_.size());
            const auto& prev = binom_cols_.back();
            std::vector<std::uint64_t> col(static_cast<std::size_t>(d_) + 1, 0);
            const std::uint64_t inv_b = F_.inv(F_.to_mont(static_cast<std::uint64_t>(b) % F_.prime()));
            for (long long a = b; a <= d_; ++a) {
                std::uint64_t factor = F_.to_mont(static_cast<std::uint64_t>(a - b + 1) % F_.prime());
                col[static_cast<std::size_t>(a)] =
                    F_.mul(F_.mul(prev[static_cast<std::size_t>(a)], factor), inv_b);
            }
            binom_cols_.push_back(std::move(col));
        }
    }

    const PrimeField& F_;
    int n_;
    long long d_;
    std::size_t cols_;
    std::vector<int> exps_;
    std::vector<std::vector<std::uint64_t>> binom_cols_;  // [b][a] = C(a,b), Montgomery
};

/// Effective vanishing order at one point: orders beyond d+1 are equivalent
/// to d+1 (they already force the zero form).
inline long long clamp_order(long long m, long long d) { return std::min(m, d + 1); }

}  // namespace detail

/// Interpolation conditions matrix: one column per degree-d monomial, and for
/// every point of multiplicity m >= 1 the block of order-(m-1) Hasse
/// derivative rows, plus blocks for the extra constraints.
inline FpMatrix conditions_matrix(const LinearSystemSpec& L, const PointConfiguration& pts,
                                  const std::vector<ExtraConstraint>& extra = {}) {
    require_linear_system(L, "conditions_matrix");
    if (pts.n != L.n()) throw std::invalid_argument("conditions_matrix: point/system mismatch");
    if (static_cast<std::uint64_t>(L.d()) >= pts.prime)
        throw OracleError("conditions_matrix: prime must exceed the degree");
    PrimeField F(pts.prime);
    detail::ConditionsBuilder builder(F, L.n(), L.d());
    FpMatrix M;
    M.prime = pts.prime;
    M.cols = builder.cols();
    auto emit_block = [&](const std::vector<std::uint64_t>& point, long long order) {
        if (order < 1) return;
        auto powtab = builder.power_table(point);
        std::vector<std::uint64_t> row;
        builder.for_each_derivative(static_cast<int>(detail::clamp_order(order, L.d())) - 1,
                                    [&](const std::vector<int>& beta) {
                                        builder.hasse_row(powtab, beta, row);
                                        std::vector<std::uint64_t> plain(M.cols);
                                        for (std::size_t j = 0; j < M.cols; ++j)
                                            plain[j] = F.from_mont(row[j]);
                                        M.rows.push_back(std::move(plain));
                                    });
    };
    for (int i = 1; i <= L.n() + 3; ++i) {
        if (L.mult(i) >= 1) emit_block(pts.points.at(static_cast<std::size_t>(i) - 1), L.mult(i));
    }
    for (const auto& ex : extra) emit_block(ex.point, ex.order);
    return M;
}

/// Exact rank by Gaussian elimination (deterministic).
inline std::size_t rank_mod_p(const FpMatrix& M) {
    PrimeField F(M.prime);
    RowEchelon ech(F, M.cols);
    std::vector<std::uint64_t> row(M.cols);
    for (const auto& r : M.rows) {
        if (r.size() != M.cols) throw std::invalid_argument("rank_mod_p: ragged matrix");
        if (ech.rank() == M.cols) break;
        for (std::size_t j = 0; j < M.cols; ++j) row[j] = F.to_mont(r[j]);
        ech.add_row(row);
    }
    return ech.rank();
}

struct SampleRecord {
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    long long rank = 0;
    long long dim = 0;
};

struct OracleResult {
    long long dim = 0;   // min over samples of (cols - rank)
    long long cols = 0;
    bool agreed = true;  // all samples produced the same dimension
    std::vector<SampleRecord> per_sample;
};

/// One system + config: point configurations and echelon forms are built per
/// sample and kept, so dimension queries and base-locus probes share the
/// expensive eliminations.
class InterpolationOracle {
public:
    InterpolationOracle(LinearSystemSpec L, OracleConfig cfg = {})
        : L_(std::move(L)), cfg_(cfg), F_(cfg.prime) {
        cfg_.validate();
        require_linear_system(L_, "oracle");
        long long maxm = 0;
        for (long long mi : L_.mults()) maxm = std::max(maxm, mi);
        if (static_cast<std::uint64_t>(L_.d()) >= cfg_.prime ||
            static_cast<std::uint64_t>(maxm) >= cfg_.prime)
            throw OracleError("oracle: prime must exceed the degree and every multiplicity");
        Int c = binom_or_zero(L_.n() + L_.d(), L_.n());
        if (c > static_cast<long>(cfg_.max_cols))
            throw OracleError("oracle: conditions matrix too large for the dense oracle "
                              "(reduce the system first or raise max_cols)");
        cols_ = c.get_ui();
        samples_.resize(static_cast<std::size_t>(cfg_.samples));
    }

    const LinearSystemSpec& system() const { return L_; }
    long long cols() const { return static_cast<long long>(cols_); }

    const OracleResult& dim() {
        if (result_) return *result_;
        const int k = cfg_.samples;
        if (cfg_.parallelism > 1 && k > 1) {
            std::vector<std::future<void>> futs;
            futs.reserve(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                futs.push_back(std::async(std::launch::async, [this, i] { ensure_sample(i); }));
            for (auto& f : futs) f.get();
        } else {
            for (int i = 0; i < k; ++i) ensure_sample(i);
        }
        OracleResult res;
        res.cols = static_cast<long long>(cols_);
        res.dim = std::numeric_limits<long long>::max();
        for (int i = 0; i < k; ++i) {
            const Sample& s = *samples_[static_cast<std::size_t>(i)];
            const long long dim_i = static_cast<long long>(cols_ - s.echelon.rank());
            res.per_sample.push_back(
                {cfg_.prime, sample_seed(i), static_cast<long long>(s.echelon.rank()), dim_i});
            res.dim = std::min(res.dim, dim_i);
        }
        for (const auto& rec : res.per_sample) res.agreed = res.agreed && rec.dim == res.dim;
        result_ = std::move(res);
        return *result_;
    }

    /// Largest k such that imposing multiplicity k at a general point of
    /// J(L_I, sigma_t) leaves every sample's dimension unchanged.  Samples
    /// must agree; disagreement is retried with fresh randomness up to five
    /// times before reporting the probe inconclusive.
    long long probe(const JoinCycle& cycle) {
        if (cycle.r() < 0 || cycle.r() > L_.n() - 1)
            throw std::invalid_argument("probe: cycle must satisfy 0 <= r <= n-1");
        if (cycle.I.max_element() > L_.n() + 3)
            throw std::invalid_argument("probe: cycle index out of range");
        if (dim().dim < 1) throw OracleError("probe: system is empty");
        for (int attempt = 0; attempt < 5; ++attempt) {
            long long k = -1;
            bool agreed = true;
            for (int s = 0; s < cfg_.samples; ++s) {
                const long long ks = measure(s, cycle, attempt);
                if (k < 0) k = ks;
                else if (k != ks) {
                    agreed = false;
                    break;
                }
            }
            if (agreed) return k;
        }
        throw OracleError("probe: samples kept disagreeing; inconclusive");
    }

    const PointConfiguration& points(int sample) { return ensure_sample(sample).pts; }

private:
    struct Sample {
        PointConfiguration pts;
        detail::ConditionsBuilder builder;
        RowEchelon echelon;
    };

    std::uint64_t sample_seed(int idx) const {
        return mix_seed(cfg_.seed, static_cast<std::uint64_t>(idx));
    }

    Sample& ensure_sample(int idx) {
        auto& slot = samples_.at(static_cast<std::size_t>(idx));
        if (slot) return *slot;
        PointConfiguration pts = sample_points(L_.n(), L_.n() + 3, cfg_, idx);
        auto sample = std::make_unique<Sample>(
            Sample{std::move(pts), detail::ConditionsBuilder(F_, L_.n(), L_.d()),
                   RowEchelon(F_, cols_)});
        std::vector<std::uint64_t> row;
        for (int i = 1; i <= L_.n() + 3 && sample->echelon.rank() < cols_; ++i) {
            const long long m = L_.mult(i);
            if (m < 1) continue;
            auto powtab = sample->builder.power_table(
                sample->pts.points[static_cast<std::size_t>(i) - 1]);
            sample->builder.for_each_derivative(
                static_cast<int>(detail::clamp_order(m, L_.d())) - 1,
                [&](const std::vector<int>& beta) {
                    if (sample->echelon.rank() == cols_) return;
                    sample->builder.hasse_row(powtab, beta, row);
                    sample->echelon.add_row(row);
                });
        }
        slot = std::move(sample);
        return *slot;
    }

    /// First derivative order whose block at a fresh general point of the
    /// cycle escapes the row span; that order equals the containment
    /// multiplicity.  The whole block lies in the span iff a uniformly random
    /// combination of its rows does (up to probability 1/p per draw), so each
    /// order is tested with two independent random combinations instead of
    /// one reduction per row.
    long long measure(int sample_idx, const JoinCycle& cycle, int attempt) {
        Sample& s = ensure_sample(sample_idx);
        const std::vector<std::uint64_t> q = sample_cycle_point(s.pts, cycle, sample_idx, attempt);
        auto powtab = s.builder.power_table(q);
        SplitMix64 rng(mix_seed(sample_seed(sample_idx),
                                0x636f6d626fULL + static_cast<std::uint64_t>(attempt)));
        std::vector<std::vector<std::uint64_t>> block;
        std::vector<std::uint64_t> row, combo;
        for (long long order = 0; order <= L_.d(); ++order) {
            block.clear();
            s.builder.for_each_derivative(static_cast<int>(order),
                                          [&](const std::vector<int>& beta) {
                                              s.builder.hasse_row(powtab, beta, row);
                                              block.push_back(row);
                                          });
            for (int draw = 0; draw < 2; ++draw) {
                combo.assign(cols_, 0);
                for (const auto& r : block) {
                    const std::uint64_t coeff = F_.to_mont(1 + rng.below(cfg_.prime - 1));
                    for (std::size_t j = 0; j < cols_; ++j)
                        combo[j] = F_.add(combo[j], F_.mul(coeff, r[j]));
                }
                if (!s.echelon.reduces_to_zero(combo)) return order;
            }
        }
        throw OracleError("probe: no derivative block escaped the span (inconsistent state)");
    }

    /// General point of J(L_I, sigma_t): random combination of the vertex
    /// points indexed by I and t curve points at fresh parameters.
    std::vector<std::uint64_t> sample_cycle_point(const PointConfiguration& pts,
                                                  const JoinCycle& cycle, int sample_idx,
                                                  int attempt) const {
        SplitMix64 rng(mix_seed(sample_seed(sample_idx),
                                0x70726f6265ULL ^ (static_cast<std::uint64_t>(attempt) << 32) ^
                                    static_cast<std::uint64_t>(cycle.t * 131 + cycle.I.size())));
        const std::uint64_t p = cfg_.prime;
        std::vector<std::uint64_t> q(static_cast<std::size_t>(L_.n()) + 1, 0);
        auto accumulate = [&](const std::vector<std::uint64_t>& pt, std::uint64_t coeff) {
            for (std::size_t j = 0; j < q.size(); ++j)
                q[j] = static_cast<std::uint64_t>(
                    (static_cast<unsigned __int128>(pt[j]) * coeff + q[j]) % p);
        };
        for (int i : cycle.I)
            accumulate(pts.points[static_cast<std::size_t>(i) - 1], 1 + rng.below(p - 1));
        std::vector<std::uint64_t> used = pts.parameters;
        for (int j = 0; j < cycle.t; ++j) {
            std::uint64_t u;
            do {
                u = rng.below(p);
            } while (std::find(used.begin(), used.end(), u) != used.end());
            used.push_back(u);
            accumulate(detail::curve_point(L_.n(), u, p), 1 + rng.below(p - 1));
        }
        return q;
    }

    LinearSystemSpec L_;
    OracleConfig cfg_;
    PrimeField F_;
    std::size_t cols_ = 0;
    std::vector<std::unique_ptr<Sample>> samples_;
    std::optional<OracleResult> result_;
};

/// Affine dimension estimate: min over samples of (#monomials - rank).
inline OracleResult oracle_dim(const LinearSystemSpec& L, const OracleConfig& cfg = {}) {
    InterpolationOracle oracle(L, cfg);
    return oracle.dim();
}

/// Exact containment multiplicity of a cycle in the base locus, measured at
/// a random general point of the cycle.
inline long long multiplicity_probe(const LinearSystemSpec& L, const JoinCycle& cycle,
                                    const OracleConfig& cfg = {}) {
    InterpolationOracle oracle(L, cfg);
    return oracle.probe(cycle);
}

inline bool is_effective_oracle(const LinearSystemSpec& L, const OracleConfig& cfg = {}) {
    return oracle_dim(L, cfg).dim >= 1;
}

}  // namespace conelab
