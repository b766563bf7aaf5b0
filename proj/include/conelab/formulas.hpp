#pragma once

/**
 * @file formulas.hpp
 * @brief Closed-form dimension and multiplicity formulas for linear systems
 *        with up to n+3 general base points: virtual dimension, the linear
 *        and secant-linear refinements, containment multiplicities of linear
 *        cycles / the rational normal curve / join cycles, the n = 2 closed
 *        form, and the non-speciality sufficient condition.
 *
 * The expected-dimension clamps (ldim, sldim) quantify over every containing
 * system (same degree, component-wise smaller multiplicities).  That search
 * space is exponential, so the default is a budgeted scan over all systems
 * whose total multiplicity drops by at most `TruncationPolicy::budget`; an
 * exhaustive mode is available for small inputs.  The budgeted search is
 * sound but incomplete, which callers should keep in mind when a clamp to
 * zero is load-bearing.
 */

#include "conelab/cones.hpp"
#include "conelab/core.hpp"

namespace conelab {

/// Containment multiplicity of the linear cycle spanned by the points in I:
/// max(sum_{i in I} m_i - (|I|-1) d, 0).
inline long long k_linear(const LinearSystemSpec& L, const MultiIndex& I) {
    if (I.size() < 1 || I.size() > L.n())
        throw std::invalid_argument("k_linear: need 1 <= |I| <= n");
    if (I.max_element() > L.n() + 3)
        throw std::invalid_argument("k_linear: index out of range");
    long long s = 0;
    for (int i : I) s += L.mult(i);
    return std::max(s - static_cast<long long>(I.size() - 1) * L.d(), 0LL);
}

/// k_C = M - n*d, the (signed, unclamped) containment multiplicity of the
/// rational normal curve through the n+3 points.
inline long long k_rnc(const LinearSystemSpec& L) {
    return L.mult_sum() - static_cast<long long>(L.n()) * L.d();
}

namespace detail {

inline long long k_join_raw(int n, long long d, const std::vector<long long>& m,
                            const MultiIndex& I, int t) {
    long long kC = std::accumulate(m.begin(), m.end(), 0LL) - static_cast<long long>(n) * d;
    long long s = 0;
    for (int i : I) s += m.at(static_cast<std::size_t>(i) - 1);
    return s + static_cast<long long>(t) * kC - static_cast<long long>(I.size() + t - 1) * d;
}

}  // namespace detail

/// Containment multiplicity of the join J(L_I, sigma_t):
/// sum_{i in I} m_i + t*k_C - (|I|+t-1) d, not clamped.  For t = 0 this is
/// the raw linear k_I, and for the empty cycle it equals d.
inline long long k_join(const LinearSystemSpec& L, const JoinCycle& c) {
    return detail::k_join_raw(L.n(), L.d(), L.mults(), c.I, c.t);
}

/// Same formula on arbitrary-sign divisor classes; t = -1 is allowed here,
/// where the value is -m_j for the unique index j outside I (|I| = n+2).
inline long long k_join(const DivisorClass& D, const MultiIndex& I, int t) {
    if (t < -1) throw std::invalid_argument("k_join: t >= -1");
    return detail::k_join_raw(D.n(), D.d(), D.m(), I, t);
}

/// Virtual dimension C(n+d, n) - sum_i C(n+m_i-1, n) (affine convention).
inline Int vdim(const LinearSystemSpec& L) {
    require_linear_system(L, "vdim");
    Int v = binom_or_zero(L.n() + L.d(), L.n());
    for (long long mi : L.mults()) v -= binom_or_zero(L.n() + mi - 1, L.n());
    return v;
}

inline Int edim(const LinearSystemSpec& L) {
    Int v = vdim(L);
    return v < 0 ? Int(0) : v;
}

/// Linear virtual dimension: the alternating sum over all linear cycles
///   sum_{r=-1}^{s-1} sum_{|I|=r+1} (-1)^{r+1} C(n + k_I - r - 1, n),
/// with the empty cycle contributing C(n+d, n) and k_I clamped at 0.
inline Int lvdim(const LinearSystemSpec& L) {
    require_linear_system(L, "lvdim");
    const int n = L.n();
    const int s = n + 3;
    const long long d = L.d();
    Int total = binom_or_zero(n + d, n);
    for (int r = 0; r <= s - 1; ++r) {
        Int level = 0;
        for_each_subset(s, r + 1, [&](const std::vector<int>& I) {
            long long k = 0;
            for (int i : I) k += L.mult(i);
            k = std::max(k - static_cast<long long>(r) * d, 0LL);
            level += binom_or_zero(n + k - r - 1, n);
        });
        if (r % 2 == 0) total -= level; else total += level;
    }
    return total;
}

/// Secant linear virtual dimension: the alternating sum over all join cycles
///   sum_{t,I} (-1)^{|I|} C(n + k_{I,sigma_t} - r_{I,sigma_t} - 1, n),
/// over 0 <= t, n - 2t >= 0, 0 <= |I| <= n - 2t.  The k-values enter raw;
/// negative ones are annihilated by the binomial convention.
inline Int slvdim(const LinearSystemSpec& L) {
    require_linear_system(L, "slvdim");
    const int n = L.n();
    const long long d = L.d();
    const long long kC = k_rnc(L);
    Int total = 0;
    for (int t = 0; n - 2 * t >= 0; ++t) {
        for (int size = 0; size <= n - 2 * t; ++size) {
            const int r = size + 2 * t - 1;
            const long long base = static_cast<long long>(t) * kC -
                                   static_cast<long long>(size + t - 1) * d;
            Int level = 0;
            for_each_subset(n + 3, size, [&](const std::vector<int>& I) {
                long long k = base;
                for (int i : I) k += L.mult(i);
                level += binom_or_zero(n + k - r - 1, n);
            });
            if (size % 2 == 0) total += level; else total -= level;
        }
    }
    return total;
}

/// Search policy for the containment quantifier in the expected-dimension
/// clamps.  `budget` bounds the total multiplicity reduction scanned;
/// `exhaustive` scans every containing system instead (small inputs only).
struct TruncationPolicy {
    long long budget = 2;
    bool exhaustive = false;
};

namespace detail {

template <typename Fn>
inline bool dominating_negative_budget(const LinearSystemSpec& L, long long budget, Fn&& value) {
    const auto& m = L.mults();
    std::vector<long long> cur(m);
    // DFS over component-wise reductions with total drop <= budget.
    std::function<bool(std::size_t, long long)> rec = [&](std::size_t pos, long long rem) -> bool {
        if (pos == cur.size()) {
            LinearSystemSpec cand(L.n(), L.d(), cur);
            return value(cand) < 0;
        }
        const long long max_drop = std::min(rem, m[pos]);
        for (long long drop = 0; drop <= max_drop; ++drop) {
            cur[pos] = m[pos] - drop;
            if (rec(pos + 1, rem - drop)) return true;
        }
        cur[pos] = m[pos];
        return false;
    };
    return rec(0, budget);
}

template <typename Fn>
inline bool dominating_negative(const LinearSystemSpec& L, const TruncationPolicy& pol,
                                Fn&& value) {
    if (!pol.exhaustive) return dominating_negative_budget(L, pol.budget, value);
    double combos = 1;
    for (long long mi : L.mults()) combos *= static_cast<double>(mi + 1);
    if (combos > 5e6)
        throw std::invalid_argument("exhaustive truncation search too large for this input");
    return dominating_negative_budget(L, L.mult_sum(), value);
}

}  // namespace detail

/// Linear expected dimension: 0 if some containing system has negative
/// linear virtual dimension (under `pol`), else max(lvdim, 0).
inline Int ldim(const LinearSystemSpec& L, const TruncationPolicy& pol = {}) {
    require_linear_system(L, "ldim");
    Int v = lvdim(L);
    if (v < 0) return Int(0);
    if (detail::dominating_negative(L, pol, [](const LinearSystemSpec& c) { return lvdim(c); }))
        return Int(0);
    return v;
}

/// Secant linear expected dimension: same clamp rule applied to slvdim.
inline Int sldim(const LinearSystemSpec& L, const TruncationPolicy& pol = {}) {
    require_linear_system(L, "sldim");
    Int v = slvdim(L);
    if (v < 0) return Int(0);
    if (detail::dominating_negative(L, pol, [](const LinearSystemSpec& c) { return slvdim(c); }))
        return Int(0);
    return v;
}

/// Riemann-Roch closed form on the blown-up plane (5 points):
/// C(d+2,2) - sum C(m_i+1,2) + sum_{i<j} C0(m_i+m_j-d, 2) + C0(k_C, 2).
/// Agrees with slvdim on every effective 5-point system.
inline Int sldim_p2_closed_form(const LinearSystemSpec& L) {
    if (L.n() != 2) throw std::invalid_argument("sldim_p2_closed_form: only defined for n = 2");
    require_linear_system(L, "sldim_p2_closed_form");
    const long long d = L.d();
    Int total = binom_or_zero(d + 2, 2);
    for (long long mi : L.mults()) total -= binom_or_zero(mi + 1, 2);
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            total += binom_or_zero(L.mult(i) + L.mult(j) - d, 2);
    total += binom_or_zero(k_rnc(L), 2);
    return total;
}

/// Sufficient condition for linear non-speciality with s = n+3 points:
/// sum m_i <= n*d + min(n - s(d), s - n - 2), where s(d) counts points of
/// full multiplicity d.  Preconditions (all n+3 multiplicities in [1, d])
/// are reported, not silently ignored.
inline bool linear_nonspecial_sufficient(const LinearSystemSpec& L) {
    require_linear_system(L, "linear_nonspecial_sufficient");
    const int s = L.positive_count();
    if (s < L.n() + 3)
        throw std::invalid_argument(
            "linear_nonspecial_sufficient: needs n+3 points of positive multiplicity");
    long long s_of_d = 0;
    for (long long mi : L.mults()) {
        if (mi > L.d())
            throw std::invalid_argument("linear_nonspecial_sufficient: needs m_i <= d");
        if (mi == L.d()) ++s_of_d;
    }
    const long long bound = static_cast<long long>(L.n()) * L.d() +
                            std::min<long long>(L.n() - s_of_d, s - L.n() - 2);
    return L.mult_sum() <= bound;
}

/// Dimension predicted by the secant-linear formula for non-empty systems;
/// systems outside the effective cone are predicted 0 outright.
inline Int predicted_dim(const LinearSystemSpec& L, const TruncationPolicy& pol = {}) {
    require_linear_system(L, "predicted_dim");
    if (!is_effective_system(L)) return Int(0);
    return sldim(L, pol);
}

struct DimReport {
    Int vdim, edim, lvdim, ldim, slvdim, sldim;
    long long k_C = 0;
};

inline DimReport dim_report(const LinearSystemSpec& L, const TruncationPolicy& pol = {}) {
    DimReport rep{vdim(L), edim(L), lvdim(L), ldim(L, pol), slvdim(L), sldim(L, pol), k_rnc(L)};
    return rep;
}

}  // namespace conelab
