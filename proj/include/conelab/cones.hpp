#pragma once

/**
 * @file cones.hpp
 * @brief Effective- and movable-cone machinery on the Neron-Severi lattice of
 *        the blow-up X of P^n at n+3 general points: intersection pairing,
 *        canonical class, degree, the degree-1 ray set, and the two facet
 *        systems with membership tests.
 *
 * Facet rows are stored as integer coefficient vectors (c_d; c_1..c_{n+3})
 * encoding c_d*d + sum_i c_i*m_i <= 0, so that evaluating a row on a class
 * reproduces the defining inequality exactly:
 *
 *   A_i      :  m_i <= d
 *   B_i      :  M - m_i <= n*d
 *   C(t, I)  :  k_{I,sigma_t} <= 0  with |I| = n-2t+1,  -1 <= t <= l+eps
 *   D(t, I)  :  k_{I,sigma_t} <= 0  with |I| = n-2t,    -1 <= t <= l+eps
 *
 * where n = 2l+eps and k_{I,sigma_t} = t*M + sum_{i in I} m_i - ((n+1)t+|I|-1)d.
 * The effective cone is cut out by the A, B, C rows and the movable cone by
 * the A, B, D rows; the D rows pair against the degree-1 rays.
 */

#include <map>
#include <memory>
#include <mutex>

#include "conelab/core.hpp"

namespace conelab {

enum class FacetKind { A, B, C, D };

struct FacetInequality {
    FacetKind kind = FacetKind::A;
    int point = 0;   // A_i / B_i rows
    int t = 0;       // C / D rows
    MultiIndex I;    // C / D rows
    std::vector<long long> coeffs;  // (c_d; c_1..c_{n+3})

    long long evaluate(const DivisorClass& D) const {
        if (coeffs.size() != D.m().size() + 1)
            throw std::invalid_argument("FacetInequality: dimension mismatch");
        long long v = coeffs[0] * D.d();
        for (std::size_t i = 0; i < D.m().size(); ++i) v += coeffs[i + 1] * D.m()[i];
        return v;
    }

    bool holds(const DivisorClass& D) const { return evaluate(D) <= 0; }

    std::string label() const {
        std::ostringstream os;
        switch (kind) {
            case FacetKind::A: os << "A_" << point; break;
            case FacetKind::B: os << "B_" << point; break;
            case FacetKind::C: os << "C(t=" << t << ", I=" << I.to_string() << ")"; break;
            case FacetKind::D: os << "D(t=" << t << ", I=" << I.to_string() << ")"; break;
        }
        return os.str();
    }

    /// Human-readable form of the inequality, e.g. "m_1 <= d".
    std::string pretty(int n) const {
        std::ostringstream os;
        switch (kind) {
            case FacetKind::A: os << "m_" << point << " <= d"; break;
            case FacetKind::B: os << "M - m_" << point << " <= " << n << "d"; break;
            case FacetKind::C:
            case FacetKind::D: os << "k(I=" << I.to_string() << ", t=" << t << ") <= 0"; break;
        }
        return os.str();
    }
};

/// Extremal ray (t+1)H - (t+1) sum_{i in I} E_i - t sum_{i not in I} E_i,
/// with |I| = n-2t and -1 <= t <= floor(n/2); for t = -1 this is the
/// exceptional class E_j of the unique index j outside I.
struct RayClass {
    int t = 0;
    MultiIndex I;
    DivisorClass cls;
};

/// Mukai pairing: <H,H> = n-1, <H,E_i> = 0, <E_i,E_j> = -delta_ij.
inline long long pairing(const DivisorClass& D1, const DivisorClass& D2) {
    if (D1.n() != D2.n()) throw std::invalid_argument("pairing: mismatched ambient dimension");
    long long v = static_cast<long long>(D1.n() - 1) * D1.d() * D2.d();
    for (std::size_t i = 0; i < D1.m().size(); ++i) v -= D1.m()[i] * D2.m()[i];
    return v;
}

/// K_X = -(n+1)H + (n-1) sum_i E_i, i.e. (d; m_i) = (-(n+1); -(n-1),...).
inline DivisorClass canonical_class(int n) {
    if (n < 2) throw std::invalid_argument("canonical_class: need n >= 2");
    return DivisorClass(n, -(n + 1),
                        std::vector<long long>(static_cast<std::size_t>(n) + 3, -(n - 1)));
}

/// deg(D) = <D, -K_X>/(n-1) = (n+1)d - sum_i m_i; integer-valued closed form,
/// so nothing is ever divided (the n = 2 pairing factor would not allow it).
inline long long degree(const DivisorClass& D) {
    if (D.n() < 2) throw std::invalid_argument("degree: need n >= 2");
    return static_cast<long long>(D.n() + 1) * D.d() - D.mult_sum();
}

namespace detail {

inline FacetInequality join_facet(int n, FacetKind kind, int t, MultiIndex I) {
    FacetInequality f;
    f.kind = kind;
    f.t = t;
    f.coeffs.assign(static_cast<std::size_t>(n) + 4, 0);
    f.coeffs[0] = -(static_cast<long long>(n + 1) * t + I.size() - 1);
    for (int i = 1; i <= n + 3; ++i)
        f.coeffs[static_cast<std::size_t>(i)] = t + (I.contains(i) ? 1 : 0);
    f.I = std::move(I);
    return f;
}

template <typename T>
const T& cached_per_n(std::map<int, std::unique_ptr<T>>& cache, std::mutex& mu, int n,
                      T (*build)(int)) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<T>(build(n))).first;
    return *it->second;
}

inline std::vector<FacetInequality> build_point_facets(int n) {
    std::vector<FacetInequality> out;
    for (int i = 1; i <= n + 3; ++i) {  // A_i: m_i - d <= 0
        FacetInequality f;
        f.kind = FacetKind::A;
        f.point = i;
        f.coeffs.assign(static_cast<std::size_t>(n) + 4, 0);
        f.coeffs[0] = -1;
        f.coeffs[static_cast<std::size_t>(i)] = 1;
        out.push_back(std::move(f));
    }
    for (int i = 1; i <= n + 3; ++i) {  // B_i: M - m_i - n*d <= 0
        FacetInequality f;
        f.kind = FacetKind::B;
        f.point = i;
        f.coeffs.assign(static_cast<std::size_t>(n) + 4, 1);
        f.coeffs[0] = -n;
        f.coeffs[static_cast<std::size_t>(i)] = 0;
        out.push_back(std::move(f));
    }
    return out;
}

inline std::vector<FacetInequality> build_facets(int n, FacetKind join_kind) {
    auto out = build_point_facets(n);
    const int l_eps = (n + 1) / 2;  // l + eps for n = 2l + eps
    const int shift = join_kind == FacetKind::C ? 1 : 0;
    for (int t = -1; t <= l_eps; ++t) {
        const int size = n - 2 * t + shift;
        if (size < 0 || size > n + 3) continue;
        for_each_subset(n + 3, size, [&](const std::vector<int>& I) {
            out.push_back(join_facet(n, join_kind, t, MultiIndex(I)));
        });
    }
    return out;
}

inline std::vector<FacetInequality> build_effective(int n) { return build_facets(n, FacetKind::C); }
inline std::vector<FacetInequality> build_movable(int n) { return build_facets(n, FacetKind::D); }

inline std::vector<RayClass> build_rays(int n) {
    std::vector<RayClass> out;
    for (int t = -1; n - 2 * t >= 0; ++t) {
        const int size = n - 2 * t;
        if (size > n + 3) continue;
        for_each_subset(n + 3, size, [&](const std::vector<int>& I) {
            MultiIndex mi(I);
            std::vector<long long> m(static_cast<std::size_t>(n) + 3, t);
            for (int i : mi) m[static_cast<std::size_t>(i) - 1] = t + 1;
            out.push_back(RayClass{t, mi, DivisorClass(n, t + 1, std::move(m))});
        });
    }
    return out;
}

}  // namespace detail

/// Facets of the effective cone: A_i, B_i and the C(t, I) rows.
inline const std::vector<FacetInequality>& facets_effective(int n) {
    if (n < 2) throw std::invalid_argument("facets_effective: need n >= 2");
    static std::map<int, std::unique_ptr<std::vector<FacetInequality>>> cache;
    static std::mutex mu;
    return detail::cached_per_n(cache, mu, n, +[](int nn) { return detail::build_effective(nn); });
}

/// Facets of the movable cone: A_i, B_i and the D(t, I) rows.
inline const std::vector<FacetInequality>& facets_movable(int n) {
    if (n < 2) throw std::invalid_argument("facets_movable: need n >= 2");
    static std::map<int, std::unique_ptr<std::vector<FacetInequality>>> cache;
    static std::mutex mu;
    return detail::cached_per_n(cache, mu, n, +[](int nn) { return detail::build_movable(nn); });
}

/// The 2^{n+2} degree-1 classes generating the effective cone, in a fixed
/// order (t ascending from -1, I lexicographic within each t).
inline const std::vector<RayClass>& rays(int n) {
    if (n < 2) throw std::invalid_argument("rays: need n >= 2");
    static std::map<int, std::unique_ptr<std::vector<RayClass>>> cache;
    static std::mutex mu;
    return detail::cached_per_n(cache, mu, n, +[](int nn) { return detail::build_rays(nn); });
}

struct MembershipReport {
    bool member = false;
    std::vector<FacetInequality> violated;
    explicit operator bool() const { return member; }
};

inline MembershipReport check_facets(const DivisorClass& D,
                                     const std::vector<FacetInequality>& facets) {
    MembershipReport rep;
    for (const auto& f : facets)
        if (!f.holds(D)) rep.violated.push_back(f);
    rep.member = rep.violated.empty();
    return rep;
}

/// Membership in the effective cone, with the violated facets on failure.
inline MembershipReport is_effective(const DivisorClass& D) {
    return check_facets(D, facets_effective(D.n()));
}

/// Membership in the movable cone (no divisorial base component).
inline MembershipReport is_movable(const DivisorClass& D) {
    return check_facets(D, facets_movable(D.n()));
}

inline bool is_effective_system(const LinearSystemSpec& L) {
    return is_effective(L.divisor_class()).member;
}

}  // namespace conelab
