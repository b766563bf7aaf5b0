#pragma once

/**
 * @file cremona.hpp
 * @brief Standard Cremona transformation based at n+1 of the points, the
 *        Cremona-reducedness test, the full reduction loop with an auditable
 *        transcript, and cone reduction (dropping points of full multiplicity
 *        while passing to P^{n-1}).  All of these preserve the dimension of
 *        the associated linear system.
 */

#include "conelab/core.hpp"

namespace conelab {

enum class StepKind { cremona, cone, clamp };

inline const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::cremona: return "cremona";
        case StepKind::cone: return "cone";
        case StepKind::clamp: return "clamp";
    }
    return "?";
}

struct ReductionStep {
    StepKind kind = StepKind::cremona;
    MultiIndex pivot;   // cremona: the n+1 base indices; cone/clamp: affected points
    long long c = 0;    // cremona steps only
    LinearSystemSpec before;
    LinearSystemSpec after;
};

namespace detail {

inline long long cremona_c_raw(int n, long long d, const std::vector<long long>& m,
                               const MultiIndex& J) {
    if (J.size() != n + 1)
        throw std::invalid_argument("cremona: pivot must have exactly n+1 indices");
    if (J.max_element() > n + 3) throw std::invalid_argument("cremona: pivot index out of range");
    long long s = 0;
    for (int i : J) s += m.at(static_cast<std::size_t>(i) - 1);
    return s - static_cast<long long>(n - 1) * d;
}

inline void apply_cremona(long long& d, std::vector<long long>& m, const MultiIndex& J,
                          long long c) {
    d -= c;
    for (int i : J) m.at(static_cast<std::size_t>(i) - 1) -= c;
}

}  // namespace detail

/// c = sum_{i in J} m_i - (n-1) d for a pivot of n+1 points.
inline long long cremona_c(const LinearSystemSpec& L, const MultiIndex& J) {
    return detail::cremona_c_raw(L.n(), L.d(), L.mults(), J);
}

inline long long cremona_c(const DivisorClass& D, const MultiIndex& J) {
    return detail::cremona_c_raw(D.n(), D.d(), D.m(), J);
}

/// Exact Cremona action at pivot J: degree d-c, multiplicities m_i-c on the
/// pivot, untouched elsewhere.  No clamping; resulting entries may be
/// negative.  Applying the same pivot twice is the identity.
inline LinearSystemSpec cremona_transform(const LinearSystemSpec& L, const MultiIndex& J) {
    long long d = L.d();
    std::vector<long long> m = L.mults();
    detail::apply_cremona(d, m, J, detail::cremona_c_raw(L.n(), d, m, J));
    return LinearSystemSpec(L.n(), d, std::move(m));
}

inline DivisorClass cremona_transform(const DivisorClass& D, const MultiIndex& J) {
    long long d = D.d();
    std::vector<long long> m = D.m();
    detail::apply_cremona(d, m, J, detail::cremona_c_raw(D.n(), d, m, J));
    return DivisorClass(D.n(), d, std::move(m));
}

/// Pivot at the n+1 largest multiplicities, ties broken by lowest index.
/// This maximizes c, hence gives the fastest degree descent.
inline MultiIndex default_pivot(const LinearSystemSpec& L) {
    std::vector<int> order(static_cast<std::size_t>(L.n()) + 3);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return L.mult(a) > L.mult(b); });
    order.resize(static_cast<std::size_t>(L.n()) + 1);
    return MultiIndex(std::move(order));
}

/// Cremona reduced: c <= 0 at the n+1 largest multiplicities.
inline bool is_cremona_reduced(const LinearSystemSpec& L) {
    if (L.d() < 0) throw std::invalid_argument("is_cremona_reduced: degree must be non-negative");
    return cremona_c(L, default_pivot(L)) <= 0;
}

/// Clamps negative multiplicities to 0 (a non-positive multiplicity imposes
/// no conditions, so the dimension is unchanged).  Clamped indices, if any,
/// are reported through `clamped`.
inline LinearSystemSpec clamp_negative(const LinearSystemSpec& L, std::vector<int>* clamped = nullptr) {
    std::vector<long long> m = L.mults();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0) {
            if (clamped) clamped->push_back(static_cast<int>(i) + 1);
            m[i] = 0;
        }
    }
    return LinearSystemSpec(L.n(), L.d(), std::move(m));
}

struct CremonaReduction {
    LinearSystemSpec system;           // Cremona reduced, or the first system with d < 0
    std::vector<ReductionStep> steps;
    bool empty = false;                // degree went negative: the system has no sections
};

/// Repeatedly applies the Cremona transform at the default pivot, clamping
/// negative multiplicities after each step, until the system is Cremona
/// reduced or its degree drops below zero.  Terminates because the degree
/// strictly decreases whenever c >= 1.  Every move is recorded.
inline CremonaReduction cremona_reduce(const LinearSystemSpec& input) {
    require_linear_system(input, "cremona_reduce");
    CremonaReduction out{input, {}, false};
    while (true) {
        MultiIndex J = default_pivot(out.system);
        const long long c = cremona_c(out.system, J);
        if (c <= 0) break;
        LinearSystemSpec next = cremona_transform(out.system, J);
        out.steps.push_back({StepKind::cremona, J, c, out.system, next});
        std::vector<int> clamped;
        LinearSystemSpec cleaned = clamp_negative(next, &clamped);
        if (!clamped.empty()) {
            out.steps.push_back({StepKind::clamp, MultiIndex(clamped), 0, next, cleaned});
        }
        out.system = cleaned;
        if (out.system.d() < 0) {
            out.empty = true;
            break;
        }
    }
    return out;
}

struct ConeReduction {
    LinearSystemSpec system;
    int removed = 0;
    bool degenerate = false;  // removal would drop the ambient dimension below 1
};

/// Removes every point of full multiplicity m_i = d, passing to P^{n-1} per
/// removal (the system is a cone with vertex at such a point).  Stops with
/// `degenerate` set if removals would exhaust the ambient dimension.
inline ConeReduction cone_reduce(const LinearSystemSpec& input) {
    if (input.d() < 0) throw std::invalid_argument("cone_reduce: degree must be non-negative");
    int n = input.n();
    long long d = input.d();
    std::vector<long long> m = input.mults();
    int removed = 0;
    bool degenerate = false;
    for (std::size_t i = 0; i < m.size();) {
        if (m[i] == d) {
            if (n == 1) {
                degenerate = true;
                break;
            }
            m.erase(m.begin() + static_cast<std::ptrdiff_t>(i));
            --n;
            ++removed;
        } else {
            ++i;
        }
    }
    // The padded vector shrinks with n: length stays n+3.
    return ConeReduction{LinearSystemSpec(n, d, std::move(m)), removed, degenerate};
}

}  // namespace conelab
