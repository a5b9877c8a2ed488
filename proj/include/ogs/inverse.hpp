#pragma once

// The closed-form standard-OGS canonical form of pi^{-1}: the two-term
// special case, the elementary-element formula, and the general kappa/chi/eta
// machinery that assembles the inverse of an arbitrary canonical form.

#include <map>
#include <stdexcept>
#include <vector>

#include "ogs/canonical.hpp"
#include "ogs/factorization.hpp"

namespace ogs {

// (t_{k1}^{i1} * t_{k2}^{i2})^{-1}, by the five-case closed formula
// (split on i2 versus k1 and k1 - i1).
inline CanonicalForm two_term_inverse(int k1, int i1, int k2, int i2) {
    if (!(2 <= k1 && k1 < k2) || !(1 <= i1 && i1 < k1) || !(1 <= i2 && i2 < k2))
        throw std::invalid_argument("two_term_inverse: precondition violation");
    CanonicalForm cf(k2);
    if (i2 > k1) {
        cf.set_exponent(k1 + k2 - i1 - i2, k2 - i2);
        cf.set_exponent(k1 + k2 - i2, k1 - i1);
        cf.set_exponent(k2, k2 - i2);
    } else if (i2 == k1) {
        cf.set_exponent(k2 - i1, k2 - k1);
        cf.set_exponent(k2, k2 - i1);
    } else if (i2 > k1 - i1) {  // k1 - i1 < i2 < k1
        cf.set_exponent(k2 - i2, k1 - i2);
        cf.set_exponent(k1 + k2 - i1 - i2, k2 - k1);
        cf.set_exponent(k2, k1 + k2 - i1 - i2);
    } else if (i2 == k1 - i1) {
        cf.set_exponent(k2 - i2, i1);
        cf.set_exponent(k2, k2 - k1);
    } else {  // i2 < k1 - i1
        cf.set_exponent(k1 - i2, k1 - i1 - i2);
        cf.set_exponent(k2 - i2, i1);
        cf.set_exponent(k2, k2 - i1 - i2);
    }
    return cf;
}

// Inverse of an elementary element:
// pi^{-1} = t_{kappa+;1}^{theta_1} * prod_{j>=2} (t_{kappa-;j}^{varrho_{j-1}}
//           * t_{kappa+;j}^{theta_j}),
// with kappa-;j = varrho_{j-1} + theta_j and kappa+;j = varrho_j + theta_j.
// The j = 1 plus-term vanishes exactly when k_1 = maj (theta_1 = 0).
inline CanonicalForm elementary_inverse(const ElementaryFactor& f) {
    f.validate();
    const FactorStats st = factor_stats(f);
    CanonicalForm cf(f.h(f.m()));
    for (int j = 1; j <= f.m(); ++j) {
        const long long varrho_prev = (j == 1) ? 0 : st.varrho[static_cast<std::size_t>(j - 2)];
        const long long theta = st.vartheta[static_cast<std::size_t>(j - 1)];
        const long long kminus = varrho_prev + theta;
        const long long kplus = st.varrho[static_cast<std::size_t>(j - 1)] + theta;
        if (j >= 2) cf.set_exponent(static_cast<int>(kminus), varrho_prev);
        if (theta > 0) cf.set_exponent(static_cast<int>(kplus), theta);
    }
    return cf;
}

// ---------------------------------------------------------------------------
// The kappa table.

struct KappaTable {
    // kappa[v-1][r-v][j-1] for 1 <= v <= z, v <= r <= z, 1 <= j <= m^{(v)}.
    std::vector<std::vector<std::vector<long long>>> minus, plus;

    int z() const { return static_cast<int>(minus.size()); }

    const std::vector<long long>& final_minus(int v) const {
        return minus[static_cast<std::size_t>(v - 1)].back();
    }
    const std::vector<long long>& final_plus(int v) const {
        return plus[static_cast<std::size_t>(v - 1)].back();
    }
};

// Base case kappa^{(v->v)} from the factor's own varrho/vartheta, then lift
// factor by factor: a minus-value inside [varrho_{j'-1}, varrho_{j'}) of the
// next factor gains that factor's vartheta_{j'}; a plus-value inside
// (varrho_{j''-1}, varrho_{j''}] gains vartheta_{j''}.
inline KappaTable build_kappa(const Factorization& fz) {
    const int z = fz.z();
    std::vector<FactorStats> stats;
    stats.reserve(static_cast<std::size_t>(z));
    for (const auto& f : fz.factors) stats.push_back(factor_stats(f));

    auto lift = [&](long long kappa, int r_next, bool is_minus) -> long long {
        const FactorStats& st = stats[static_cast<std::size_t>(r_next - 1)];
        const int m = static_cast<int>(st.varrho.size());
        for (int j = 1; j <= m; ++j) {
            const long long lo = (j == 1) ? 0 : st.varrho[static_cast<std::size_t>(j - 2)];
            const long long hi = st.varrho[static_cast<std::size_t>(j - 1)];
            const bool in = is_minus ? (lo <= kappa && kappa < hi)
                                     : (lo < kappa && kappa <= hi);
            if (in) return kappa + st.vartheta[static_cast<std::size_t>(j - 1)];
        }
        throw std::logic_error("build_kappa: no bracket index (factorization bug)");
    };

    KappaTable kt;
    kt.minus.resize(static_cast<std::size_t>(z));
    kt.plus.resize(static_cast<std::size_t>(z));
    for (int v = 1; v <= z; ++v) {
        const FactorStats& st = stats[static_cast<std::size_t>(v - 1)];
        const int m = static_cast<int>(st.varrho.size());
        std::vector<long long> km(static_cast<std::size_t>(m)), kp(static_cast<std::size_t>(m));
        for (int j = 1; j <= m; ++j) {
            const long long varrho_prev = (j == 1) ? 0 : st.varrho[static_cast<std::size_t>(j - 2)];
            km[static_cast<std::size_t>(j - 1)] = varrho_prev + st.vartheta[static_cast<std::size_t>(j - 1)];
            kp[static_cast<std::size_t>(j - 1)] =
                st.varrho[static_cast<std::size_t>(j - 1)] + st.vartheta[static_cast<std::size_t>(j - 1)];
        }
        kt.minus[static_cast<std::size_t>(v - 1)].push_back(km);
        kt.plus[static_cast<std::size_t>(v - 1)].push_back(kp);
        for (int r = v; r < z; ++r) {
            std::vector<long long> nm(km.size()), np(kp.size());
            const auto& pm = kt.minus[static_cast<std::size_t>(v - 1)].back();
            const auto& pp = kt.plus[static_cast<std::size_t>(v - 1)].back();
            for (std::size_t j = 0; j < pm.size(); ++j) {
                nm[j] = lift(pm[j], r + 1, /*is_minus=*/true);
                np[j] = lift(pp[j], r + 1, /*is_minus=*/false);
            }
            kt.minus[static_cast<std::size_t>(v - 1)].push_back(std::move(nm));
            kt.plus[static_cast<std::size_t>(v - 1)].push_back(std::move(np));
        }
    }
    return kt;
}

// ---------------------------------------------------------------------------
// chi and eta.

struct ChiEtaTable {
    // chi[v-1][j-1], eta[v-1][j-1] for 1 <= v <= z, 1 <= j <= m^{(v)}.
    std::vector<std::vector<int>> chi;
    std::vector<std::vector<long long>> eta;
};

// chi^{(v)}_j: the largest v' < v (scanning downward) whose final kappa
// sequence exhibits a gap around kappa^{(v)}_{+;j}; 0 when none does.
// eta^{(v)}_j: sum over v' = chi+1 .. v-1 of vartheta^{(v')}_{j'} where
// kappa^{(v')}_{-;j'} < kappa^{(v)}_{+;j} < kappa^{(v')}_{+;j'} (both strict).
inline ChiEtaTable build_chi_eta(const Factorization& fz, const KappaTable& kt) {
    const int z = fz.z();
    std::vector<FactorStats> stats;
    stats.reserve(static_cast<std::size_t>(z));
    for (const auto& f : fz.factors) stats.push_back(factor_stats(f));

    ChiEtaTable ce;
    ce.chi.resize(static_cast<std::size_t>(z));
    ce.eta.resize(static_cast<std::size_t>(z));
    for (int v = 1; v <= z; ++v) {
        const int m = fz.factors[static_cast<std::size_t>(v - 1)].m();
        auto& chis = ce.chi[static_cast<std::size_t>(v - 1)];
        auto& etas = ce.eta[static_cast<std::size_t>(v - 1)];
        chis.assign(static_cast<std::size_t>(m), 0);
        etas.assign(static_cast<std::size_t>(m), 0);
        for (int j = 1; j <= m; ++j) {
            const long long kp = kt.final_plus(v)[static_cast<std::size_t>(j - 1)];
            int chi = 0;
            for (int vp = v - 1; vp >= 1; --vp) {
                const auto& fm = kt.final_minus(vp);
                const auto& fp = kt.final_plus(vp);
                const std::size_t mm = fm.size();
                bool gap = kp < fm[0] || fp[mm - 1] <= kp;
                for (std::size_t jp = 0; !gap && jp + 1 < mm; ++jp)
                    gap = fp[jp] <= kp && kp < fm[jp + 1];
                if (gap) { chi = vp; break; }
            }
            chis[static_cast<std::size_t>(j - 1)] = chi;
            long long eta = 0;
            for (int vp = chi + 1; vp <= v - 1; ++vp) {
                const auto& fm = kt.final_minus(vp);
                const auto& fp = kt.final_plus(vp);
                for (std::size_t jp = 0; jp < fm.size(); ++jp)
                    if (fm[jp] < kp && kp < fp[jp]) {
                        eta += stats[static_cast<std::size_t>(vp - 1)]
                                   .vartheta[jp];
                        break;
                    }
            }
            etas[static_cast<std::size_t>(j - 1)] = eta;
        }
    }
    return ce;
}

// ---------------------------------------------------------------------------
// The general inverse.

// Collects, for every distinct final kappa value, the exponent contributions:
// a kappa+ key accumulates vartheta + eta over its occurrences; a kappa- key
// gets kappa- minus the sum of vartheta + eta_{j-1} over its occurrences.
// Zero exponents are dropped; a key claimed by both signs is an internal error.
inline CanonicalForm inverse_canonical(const CanonicalForm& cf) {
    if (cf.is_identity()) return cf;
    const Factorization fz = factorize(cf);
    const KappaTable kt = build_kappa(fz);
    const ChiEtaTable ce = build_chi_eta(fz, kt);

    std::map<long long, long long> plus_sum;   // key -> sum(vartheta + eta_j)
    std::map<long long, long long> minus_sub;  // key -> sum(vartheta + eta_{j-1})
    std::vector<FactorStats> stats;
    for (const auto& f : fz.factors) stats.push_back(factor_stats(f));
    for (int v = 1; v <= fz.z(); ++v) {
        const FactorStats& st = stats[static_cast<std::size_t>(v - 1)];
        const int m = static_cast<int>(st.varrho.size());
        for (int j = 1; j <= m; ++j) {
            const long long theta = st.vartheta[static_cast<std::size_t>(j - 1)];
            const long long eta_j = ce.eta[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(j - 1)];
            const long long eta_jm1 =
                (j == 1) ? 0
                         : ce.eta[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(j - 2)];
            plus_sum[kt.final_plus(v)[static_cast<std::size_t>(j - 1)]] += theta + eta_j;
            minus_sub[kt.final_minus(v)[static_cast<std::size_t>(j - 1)]] += theta + eta_jm1;
        }
    }

    CanonicalForm inv(cf.degree());
    for (auto [key, sub] : minus_sub) {
        if (plus_sum.count(key))
            throw std::logic_error("inverse_canonical: key is both kappa- and kappa+");
        const long long e = key - sub;
        if (e == 0) continue;
        if (key < 2 || e < 0 || e >= key)
            throw std::logic_error("inverse_canonical: kappa- exponent out of range");
        inv.set_exponent(static_cast<int>(key), e);
    }
    for (auto [key, e] : plus_sum) {
        if (e == 0) continue;
        if (key < 2 || e < 0 || e >= key)
            throw std::logic_error("inverse_canonical: kappa+ exponent out of range");
        inv.set_exponent(static_cast<int>(key), e);
    }
    return inv;
}

// des(pi^{-1}) = the distinct non-zero final kappa- values.
inline std::set<int> inverse_descents(const CanonicalForm& cf) {
    std::set<int> des;
    if (cf.is_identity()) return des;
    const Factorization fz = factorize(cf);
    const KappaTable kt = build_kappa(fz);
    for (int v = 1; v <= fz.z(); ++v)
        for (long long k : kt.final_minus(v))
            if (k != 0) des.insert(static_cast<int>(k));
    return des;
}

// When the factors pairwise commute (maj(pi^{(v)}) = h_1^{(v)} and
// i_1^{(v)} >= h^{(v-1)}_{m^{(v-1)}}), the inverse is the term-wise product
// prod_v prod_j t_{kappa-;j}^{varrho_{j-1}} * t_{kappa+;j}^{vartheta_j}.
inline CanonicalForm commuting_factor_inverse(const Factorization& fz) {
    for (int v = 1; v <= fz.z(); ++v) {
        const ElementaryFactor& f = fz.factors[static_cast<std::size_t>(v - 1)];
        if (f.maj() != f.h(1))
            throw std::invalid_argument("commuting_factor_inverse: maj != h_1");
        if (v >= 2) {
            const ElementaryFactor& prev = fz.factors[static_cast<std::size_t>(v - 2)];
            if (f.i(1) < prev.h(prev.m()))
                throw std::invalid_argument("commuting_factor_inverse: factors not disjoint");
        }
    }
    const KappaTable kt = build_kappa(fz);
    TermProduct prod;
    for (int v = 1; v <= fz.z(); ++v) {
        const FactorStats st = factor_stats(fz.factors[static_cast<std::size_t>(v - 1)]);
        const int m = static_cast<int>(st.varrho.size());
        for (int j = 1; j <= m; ++j) {
            const long long varrho_prev = (j == 1) ? 0 : st.varrho[static_cast<std::size_t>(j - 2)];
            const long long km = kt.final_minus(v)[static_cast<std::size_t>(j - 1)];
            const long long kp = kt.final_plus(v)[static_cast<std::size_t>(j - 1)];
            if (km >= 2 && varrho_prev > 0) prod.terms.emplace_back(static_cast<int>(km), varrho_prev);
            if (kp >= 2 && st.vartheta[static_cast<std::size_t>(j - 1)] > 0)
                prod.terms.emplace_back(static_cast<int>(kp),
                                        st.vartheta[static_cast<std::size_t>(j - 1)]);
        }
    }
    return canonical_from_terms(fz.n, prod);
}

}  // namespace ogs
