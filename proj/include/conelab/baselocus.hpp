#pragma once

/**
 * @file baselocus.hpp
 * @brief Enumeration of the positive-dimensional obstructing cycles in the
 *        base locus of an effective system — linear spans, the rational
 *        normal curve, its secant varieties and their joins — with exact
 *        containment multiplicities, plus residual removal of divisorial
 *        fixed components and the secant-variety geometry constants.
 */

#include "conelab/cones.hpp"
#include "conelab/formulas.hpp"

namespace conelab {

class EffectivityError : public std::runtime_error {
public:
    EffectivityError(std::string msg, std::vector<FacetInequality> violated_facets)
        : std::runtime_error(std::move(msg)), violated(std::move(violated_facets)) {}
    std::vector<FacetInequality> violated;
};

inline void require_effective(const LinearSystemSpec& L, const char* op) {
    require_linear_system(L, op);
    auto rep = is_effective(L.divisor_class());
    if (!rep.member) {
        std::ostringstream os;
        os << op << ": system is empty; violated facets:";
        for (const auto& f : rep.violated) os << ' ' << f.label();
        throw EffectivityError(os.str(), std::move(rep.violated));
    }
}

/// One symmetry class of base-locus cycles: a representative join cycle, its
/// exact containment multiplicity k, whether it is a fixed divisor, and how
/// many index sets share the same (t, |I|, k).
struct BaseLocusEntry {
    JoinCycle cycle;
    long long k = 0;
    bool divisorial = false;
    long long count = 1;
};

/// All positive-dimensional cycles J(L_I, sigma_t) with 1 <= r <= n-1 and
/// k_{I,sigma_t} > 0, grouped by (t, |I|, k) and sorted by (t, |I|, -k).
/// The base points themselves (r = 0) are the input data and are omitted.
inline std::vector<BaseLocusEntry> base_locus_table(const LinearSystemSpec& L) {
    require_effective(L, "base_locus_table");
    const int n = L.n();
    std::vector<BaseLocusEntry> out;
    for (int t = 0; n - 2 * t >= 0; ++t) {
        for (int size = 0; size <= n - 2 * t; ++size) {
            // r = size + 2t - 1 in [1, n-1]; for t = 0 that needs size >= 2.
            if (size + 2 * t - 1 < 1) continue;
            std::map<long long, std::pair<long long, MultiIndex>> classes;  // k -> (count, first I)
            for_each_subset(n + 3, size, [&](const std::vector<int>& I) {
                MultiIndex mi(I);
                long long k = k_join(L, JoinCycle(mi, t));
                if (k <= 0) return;
                auto it = classes.find(k);
                if (it == classes.end()) classes.emplace(k, std::make_pair(1LL, mi));
                else ++it->second.first;
            });
            for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
                JoinCycle rep(it->second.second, t);
                out.push_back(BaseLocusEntry{rep, it->first, rep.is_divisorial(n), it->second.first});
            }
        }
    }
    return out;
}

/// The divisorial fixed components (rows of the table with r = n-1).
inline std::vector<BaseLocusEntry> divisorial_fixed_components(const LinearSystemSpec& L) {
    auto table = base_locus_table(L);
    std::vector<BaseLocusEntry> out;
    for (auto& e : table)
        if (e.divisorial) out.push_back(std::move(e));
    return out;
}

struct ResidualResult {
    LinearSystemSpec system;
    bool clamped = false;  // some multiplicity went negative and was clamped to 0
};

/// Removes a divisorial fixed component k times: the join hypersurface has
/// degree t+1, multiplicity t+1 at the vertex points and t at the others, so
/// d' = d - (t+1)k, m_i' = m_i - (t+1)k on I and m_i - t*k elsewhere.
inline ResidualResult residual_remove(const LinearSystemSpec& L, const BaseLocusEntry& entry) {
    require_linear_system(L, "residual_remove");
    const int n = L.n();
    if (!entry.cycle.is_divisorial(n))
        throw std::invalid_argument("residual_remove: cycle is not divisorial");
    const long long k = k_join(L, entry.cycle);
    if (k < 1)
        throw std::invalid_argument("residual_remove: cycle is not a fixed component (k <= 0)");
    if (entry.k != k)
        throw std::invalid_argument("residual_remove: entry multiplicity is stale for this system");
    const long long t = entry.cycle.t;
    long long d = L.d() - (t + 1) * k;
    std::vector<long long> m = L.mults();
    bool clamped = false;
    for (int i = 1; i <= n + 3; ++i) {
        long long drop = (entry.cycle.I.contains(i) ? t + 1 : t) * k;
        long long v = m[static_cast<std::size_t>(i) - 1] - drop;
        if (v < 0) {
            v = 0;
            clamped = true;
        }
        m[static_cast<std::size_t>(i) - 1] = v;
    }
    return ResidualResult{LinearSystemSpec(n, d, std::move(m)), clamped};
}

/// Classical geometry of the t-th secant variety sigma_t of a degree-n
/// rational normal curve: dimension min(n, 2t-1); degree C(n-t+1, t) (valid
/// up to the hypersurface range 2t <= n); multiplicity C(n-t, t-1) along the
/// curve; and multiplicity along sigma_tau bounded below by C(n-t-tau+1, t-tau),
/// exactly t-tau+1 in the hypersurface case n = 2t.
struct SecantGeometry {
    int n = 0;
    int t = 0;
    int dim = 0;
    Int degree;
    Int mult_along_curve;
    bool hypersurface = false;  // n == 2t: sigma_t is the unique divisorial secant

    Int mult_along_secant_lower(int tau) const {
        if (tau < 1 || tau >= t)
            throw std::invalid_argument("mult_along_secant_lower: need 1 <= tau < t");
        return binom_or_zero(n - t - tau + 1, t - tau);
    }

    long long exact_mult_along_secant(int tau) const {
        if (!hypersurface)
            throw std::invalid_argument("exact_mult_along_secant: exact value known only for n = 2t");
        if (tau < 1 || tau > t)
            throw std::invalid_argument("exact_mult_along_secant: need 1 <= tau <= t");
        return t - tau + 1;
    }
};

inline SecantGeometry secant_geometry(int n, int t) {
    if (n < 1 || t < 1) throw std::invalid_argument("secant_geometry: need n >= 1, t >= 1");
    SecantGeometry g;
    g.n = n;
    g.t = t;
    g.dim = std::min(n, 2 * t - 1);
    g.degree = binom_or_zero(n - t + 1, t);
    g.mult_along_curve = binom_or_zero(n - t, t - 1);
    g.hypersurface = (n == 2 * t);
    return g;
}

}  // namespace conelab
