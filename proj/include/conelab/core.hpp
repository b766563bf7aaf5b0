#pragma once

/**
 * @file core.hpp
 * @brief Domain types and integer combinatorics shared by every other header:
 *        linear systems with fat base points, divisor classes on the blow-up,
 *        index sets, join cycles, and the binomial/enumeration primitives.
 *
 * Conventions:
 *  - Point indices are 1-based everywhere in the public surface.
 *  - A system in P^n carries exactly n+3 multiplicities; shorter input
 *    vectors are zero-padded on construction.
 *  - Dimension-like quantities use arbitrary precision (`Int`), since
 *    binomials such as C(n+d, n) overflow fixed width quickly.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace conelab {

using Int = mpz_class;

/// C(a, b) for a >= b >= 0, and 0 whenever a < b (including negative a).
/// This is the convention that makes dimension-formula terms vanish
/// exactly when the containment multiplicity is too small to obstruct.
inline Int binom_or_zero(long long a, long long b) {
    if (b < 0) throw std::invalid_argument("binom_or_zero: lower index must be non-negative");
    if (a < b) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

/// Sorted, duplicate-free set of 1-based point indices.
class MultiIndex {
public:
    MultiIndex() = default;

    explicit MultiIndex(std::vector<int> indices) : idx_(std::move(indices)) {
        std::sort(idx_.begin(), idx_.end());
        if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end())
            throw std::invalid_argument("MultiIndex: duplicate index");
        if (!idx_.empty() && idx_.front() < 1)
            throw std::invalid_argument("MultiIndex: indices are 1-based");
    }

    static MultiIndex range(int lo, int hi) {
        std::vector<int> v;
        for (int i = lo; i <= hi; ++i) v.push_back(i);
        return MultiIndex(std::move(v));
    }

    int size() const { return static_cast<int>(idx_.size()); }
    bool empty() const { return idx_.empty(); }
    bool contains(int i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }
    int max_element() const { return idx_.empty() ? 0 : idx_.back(); }

    const std::vector<int>& indices() const { return idx_; }
    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }

    bool operator==(const MultiIndex& o) const { return idx_ == o.idx_; }
    bool operator<(const MultiIndex& o) const { return idx_ < o.idx_; }

    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < idx_.size(); ++i) {
            if (i) os << ',';
            os << idx_[i];
        }
        os << '}';
        return os.str();
    }

private:
    std::vector<int> idx_;
};

/// The join J(L_I, sigma_t) of the span of the points indexed by I with the
/// t-th secant variety of the rational normal curve through all n+3 points.
/// Its dimension is r = |I| + 2t - 1; the empty cycle (I = {}, t = 0) has
/// r = -1 and stands for the degree term of the dimension formulas.
struct JoinCycle {
    MultiIndex I;
    int t = 0;

    JoinCycle() = default;
    JoinCycle(MultiIndex index_set, int secant_index) : I(std::move(index_set)), t(secant_index) {
        if (t < 0) throw std::invalid_argument("JoinCycle: secant index must be >= 0");
    }

    static JoinCycle empty() { return JoinCycle{}; }
    static JoinCycle curve() { return JoinCycle(MultiIndex{}, 1); }
    static JoinCycle secant(int t) { return JoinCycle(MultiIndex{}, t); }

    int r() const { return I.size() + 2 * t - 1; }
    bool is_divisorial(int n) const { return r() == n - 1; }

    bool operator==(const JoinCycle& o) const { return t == o.t && I == o.I; }

    std::string to_string() const {
        std::ostringstream os;
        os << "J(I=" << I.to_string() << ", t=" << t << ")";
        return os.str();
    }
};

/// Divisor class dH - sum_i m_i E_i on the blow-up of P^n at n+3 points,
/// in Neron-Severi coordinates (d; m_1,...,m_{n+3}).  Entries of any sign.
class DivisorClass {
public:
    DivisorClass(int n, long long d, std::vector<long long> m) : n_(n), d_(d), m_(std::move(m)) {
        if (n_ < 1) throw std::invalid_argument("DivisorClass: need n >= 1");
        if (m_.size() > static_cast<std::size_t>(n_) + 3)
            throw std::invalid_argument("DivisorClass: more than n+3 coordinates");
        m_.resize(static_cast<std::size_t>(n_) + 3, 0);
    }

    int n() const { return n_; }
    long long d() const { return d_; }
    const std::vector<long long>& m() const { return m_; }
    long long m(int i) const { return m_.at(static_cast<std::size_t>(i) - 1); }  // 1-based

    long long mult_sum() const { return std::accumulate(m_.begin(), m_.end(), 0LL); }

    bool operator==(const DivisorClass& o) const = default;

private:
    int n_;
    long long d_;
    std::vector<long long> m_;
};

/// The linear system L_{n,d}(m_1,...,m_s) of degree-d hypersurfaces of P^n
/// with multiplicity >= m_i at s <= n+3 general points.  The multiplicity
/// vector is zero-padded to length n+3; padding entries impose nothing.
///
/// The type itself places no sign restriction on d or the m_i (Cremona
/// transforms may produce intermediate negative values); operations with
/// linear-system semantics enforce d >= 0, m_i >= 0 at their boundary.
class LinearSystemSpec {
public:
    LinearSystemSpec(int n, long long d, std::vector<long long> mults)
        : n_(n), d_(d), m_(std::move(mults)) {
        if (n_ < 1) throw std::invalid_argument("LinearSystemSpec: need n >= 1");
        if (m_.size() > static_cast<std::size_t>(n_) + 3)
            throw std::invalid_argument("LinearSystemSpec: more than n+3 base points");
        m_.resize(static_cast<std::size_t>(n_) + 3, 0);
    }

    int n() const { return n_; }
    long long d() const { return d_; }
    const std::vector<long long>& mults() const { return m_; }
    long long mult(int i) const { return m_.at(static_cast<std::size_t>(i) - 1); }  // 1-based

    /// M = sum of all multiplicities (padding included, harmlessly).
    long long mult_sum() const { return std::accumulate(m_.begin(), m_.end(), 0LL); }

    /// Number of strictly positive multiplicities.
    int positive_count() const {
        return static_cast<int>(std::count_if(m_.begin(), m_.end(), [](long long v) { return v > 0; }));
    }

    DivisorClass divisor_class() const { return DivisorClass(n_, d_, m_); }

    bool operator==(const LinearSystemSpec& o) const = default;

private:
    int n_;
    long long d_;
    std::vector<long long> m_;
};

/// Throws unless the system has linear-system semantics (d >= 0, all m_i >= 0).
inline void require_linear_system(const LinearSystemSpec& L, const char* op) {
    if (L.d() < 0)
        throw std::invalid_argument(std::string(op) + ": degree must be non-negative");
    for (long long mi : L.mults())
        if (mi < 0)
            throw std::invalid_argument(std::string(op) + ": multiplicities must be non-negative");
}

/// Visits every size-k subset of {1,...,universe} in lexicographic order.
/// The same buffer is passed to each call; callers must not retain it.
template <typename Fn>
inline void for_each_subset(int universe, int k, Fn&& fn) {
    if (k < 0 || k > universe) return;
    std::vector<int> comb(static_cast<std::size_t>(k));
    std::iota(comb.begin(), comb.end(), 1);
    while (true) {
        fn(const_cast<const std::vector<int>&>(comb));
        int i = k - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == universe - (k - 1 - i)) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// All join cycles (I, t) with t >= 0, I a subset of {1,...,n+3}, whose
/// sizes pass `size_rule(|I|, t)`.  Emitted in a fixed order: t ascending,
/// then |I| ascending, then I lexicographic.  The scan covers the formal
/// range |I| + 2t <= n + 1, which contains every index family used by the
/// dimension formulas and the cone facet systems.
inline std::vector<JoinCycle> enumerate_join_cycles(
    int n, const std::function<bool(int, int)>& size_rule) {
    if (n < 1) throw std::invalid_argument("enumerate_join_cycles: need n >= 1");
    std::vector<JoinCycle> out;
    const int points = n + 3;
    for (int t = 0; n - 2 * t + 1 >= 0; ++t) {
        for (int size = 0; size <= std::min(points, n - 2 * t + 1); ++size) {
            if (!size_rule(size, t)) continue;
            for_each_subset(points, size, [&](const std::vector<int>& I) {
                out.emplace_back(MultiIndex(I), t);
            });
        }
    }
    return out;
}

}  // namespace conelab
