#pragma once

// Elementary elements of the standard OGS of S_n and the unique elementary
// factorization of an arbitrary canonical form, together with the explicit
// length and descent-set formulas and the parabolic/commutation predicates.
//
// An elementary element satisfies maj(pi) = sum of exponents <= smallest
// active index; it has exactly one descent, located at its major index.

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ogs/canonical.hpp"
#include "ogs/permutation.hpp"

namespace ogs {

struct ElementaryFactor {
    std::vector<std::pair<int, int>> pairs;  // (h_j, i_j), h strictly increasing

    int m() const { return static_cast<int>(pairs.size()); }
    int h(int j) const { return pairs[static_cast<std::size_t>(j - 1)].first; }   // 1-based
    int i(int j) const { return pairs[static_cast<std::size_t>(j - 1)].second; }  // 1-based

    long long maj() const {
        long long s = 0;
        for (auto [hj, ij] : pairs) s += ij;
        return s;
    }

    void validate() const {
        if (pairs.empty()) throw std::invalid_argument("ElementaryFactor: empty factor");
        for (int j = 1; j <= m(); ++j) {
            if (i(j) < 1 || i(j) >= h(j))
                throw std::invalid_argument("ElementaryFactor: exponent out of range");
            if (j > 1 && h(j - 1) >= h(j))
                throw std::invalid_argument("ElementaryFactor: indices must increase");
        }
        if (maj() > h(1))
            throw std::invalid_argument("ElementaryFactor: exponent sum exceeds first index");
    }

    bool operator==(const ElementaryFactor&) const = default;
};

// Suffix sums rho_j, prefix sums varrho_j, offsets vartheta_j = h_j - maj.
struct FactorStats {
    std::vector<long long> rho;       // rho[j-1]      = sum_{x >= j} i_x
    std::vector<long long> varrho;    // varrho[j-1]   = sum_{x <= j} i_x
    std::vector<long long> vartheta;  // vartheta[j-1] = h_j - maj
    long long maj = 0;
};

inline FactorStats factor_stats(const ElementaryFactor& f) {
    FactorStats st;
    const int m = f.m();
    st.rho.assign(static_cast<std::size_t>(m), 0);
    st.varrho.assign(static_cast<std::size_t>(m), 0);
    st.vartheta.assign(static_cast<std::size_t>(m), 0);
    long long pre = 0;
    for (int j = 1; j <= m; ++j) {
        pre += f.i(j);
        st.varrho[static_cast<std::size_t>(j - 1)] = pre;
    }
    st.maj = pre;
    long long suf = 0;
    for (int j = m; j >= 1; --j) {
        suf += f.i(j);
        st.rho[static_cast<std::size_t>(j - 1)] = suf;
    }
    for (int j = 1; j <= m; ++j)
        st.vartheta[static_cast<std::size_t>(j - 1)] = f.h(j) - st.maj;
    return st;
}

struct Factorization {
    int n = 1;
    std::vector<ElementaryFactor> factors;  // v = 1..z, maj strictly increasing

    int z() const { return static_cast<int>(factors.size()); }
    bool operator==(const Factorization&) const = default;
};

inline bool is_elementary(const CanonicalForm& cf) {
    if (cf.is_identity()) return true;  // empty product
    long long maj = 0;
    for (auto [k, e] : cf.exponents()) maj += e;
    return maj <= cf.exponents().begin()->first;
}

// Unique elementary factorization, constructed from the right exactly as in
// the factorization theorem's proof: take the smallest terminal run whose
// exponent sum reaches the preceding index; when the sum strictly exceeds the
// run's first index, split that pivot exponent so the new factor has
// maj equal to the pivot index.
inline Factorization factorize(const CanonicalForm& cf) {
    Factorization fz;
    fz.n = cf.degree();
    std::vector<std::pair<int, int>> terms(cf.exponents().begin(), cf.exponents().end());
    while (!terms.empty()) {
        const int m = static_cast<int>(terms.size());
        long long sum = 0;
        int r = 0;
        for (r = 1; r <= m; ++r) {
            sum += terms[static_cast<std::size_t>(m - r)].second;
            if (r == m || sum >= terms[static_cast<std::size_t>(m - r - 1)].first) break;
        }
        const std::size_t first = static_cast<std::size_t>(m - r);  // first term of the run
        const int pivot_k = terms[first].first;
        ElementaryFactor f;
        if (sum > pivot_k) {
            // Split the pivot exponent: the factor keeps maj = pivot_k.
            const long long tail = sum - terms[first].second;  // sum of the run after the pivot
            const int keep = static_cast<int>(pivot_k - tail);
            f.pairs.emplace_back(pivot_k, keep);
            for (std::size_t x = first + 1; x < terms.size(); ++x) f.pairs.push_back(terms[x]);
            terms.resize(first + 1);
            terms[first].second -= keep;
            if (terms[first].second == 0) terms.pop_back();
        } else {
            f.pairs.assign(terms.begin() + static_cast<std::ptrdiff_t>(first), terms.end());
            terms.resize(first);
        }
        f.validate();
        fz.factors.push_back(std::move(f));
    }
    std::reverse(fz.factors.begin(), fz.factors.end());
    return fz;
}

inline CanonicalForm canonical_from_factorization(const Factorization& fz) {
    TermProduct prod;
    for (const auto& f : fz.factors)
        for (auto [k, e] : f.pairs) prod.terms.emplace_back(k, e);
    return canonical_from_terms(fz.n, prod);
}

// ell(pi) = sum_k k * i_k - sum_v maj(pi^{(v)})^2.
inline long long length_formula(const CanonicalForm& cf) {
    long long lin = 0;
    for (auto [k, e] : cf.exponents()) lin += static_cast<long long>(k) * e;
    long long sq = 0;
    for (const auto& f : factorize(cf).factors) sq += f.maj() * f.maj();
    return lin - sq;
}

// des(pi) = { maj(pi^{(v)}) : v = 1..z }.
inline std::set<int> descents_formula(const CanonicalForm& cf) {
    std::set<int> des;
    for (const auto& f : factorize(cf).factors) des.insert(static_cast<int>(f.maj()));
    return des;
}

// ---------------------------------------------------------------------------
// Per-factor structure.

// The reduced word of an elementary factor: runs of height rho_1 on
// u = rho_1 .. h_1 - 1, then height rho_{j+1} on u = h_j .. h_{j+1} - 1.
inline NormalWord elementary_normal_word(const ElementaryFactor& f) {
    f.validate();
    const FactorStats st = factor_stats(f);
    const int m = f.m();
    const int n = f.h(m);
    std::vector<int> y(static_cast<std::size_t>(n - 1), 0);
    for (int u = static_cast<int>(st.rho[0]); u < f.h(1); ++u)
        y[static_cast<std::size_t>(u - 1)] = static_cast<int>(st.rho[0]);
    for (int j = 1; j < m; ++j)
        for (int u = f.h(j); u < f.h(j + 1); ++u)
            y[static_cast<std::size_t>(u - 1)] = static_cast<int>(st.rho[static_cast<std::size_t>(j)]);
    return NormalWord(n, std::move(y));
}

// Fast one-line evaluation of an elementary factor in S_n, by the piecewise
// description: ascending blocks k_q - rho_1 + p on the varrho intervals,
// then p - rho_q between consecutive indices, identity above h_m.
inline Permutation elementary_eval(const ElementaryFactor& f, int n) {
    f.validate();
    if (f.h(f.m()) > n) throw std::invalid_argument("elementary_eval: degree too small");
    const FactorStats st = factor_stats(f);
    const int m = f.m();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int qi = 1; qi <= m; ++qi) {
        const long long lo = (qi == 1) ? 0 : st.varrho[static_cast<std::size_t>(qi - 2)];
        const long long hi = st.varrho[static_cast<std::size_t>(qi - 1)];
        for (long long p = lo + 1; p <= hi; ++p)
            img[static_cast<std::size_t>(p - 1)] = static_cast<int>(f.h(qi) - st.rho[0] + p);
    }
    for (int qi = 1; qi <= m; ++qi) {
        const long long lo = (qi == 1) ? st.maj : f.h(qi - 1);
        const long long hi = f.h(qi);
        for (long long p = lo + 1; p <= hi; ++p)
            img[static_cast<std::size_t>(p - 1)] =
                static_cast<int>(p - st.rho[static_cast<std::size_t>(qi - 1)]);
    }
    for (int p = f.h(m) + 1; p <= n; ++p) img[static_cast<std::size_t>(p - 1)] = p;
    return Permutation(std::move(img));
}

// pi * t_x^{i_x} = t_{rho_1 + i_x}^{rho_1} * t_{rho_1 + x}^{i_x} * pi,
// valid when x <= h_1 - maj(pi).  Returns the two-term prefix.
inline TermProduct elementary_right_absorb(const ElementaryFactor& f, int x, int i_x) {
    f.validate();
    const FactorStats st = factor_stats(f);
    if (!(1 <= i_x && i_x < x) || x > f.h(1) - st.maj)
        throw std::invalid_argument("elementary_right_absorb: precondition violation");
    TermProduct out;
    out.terms.emplace_back(static_cast<int>(st.rho[0] + i_x), st.rho[0]);
    out.terms.emplace_back(static_cast<int>(st.rho[0] + x), i_x);
    return out;
}

// t_q^{i_q} * pi = [prod_v (t_{rho_1^{(v)} + i_q}^{i_q} * prod_j
// t_{h_j^{(v)} + i_q}^{i_j^{(v)}})] * t_q^{i_q}, valid when q - i_q is at
// least the largest index appearing in the factorization.  Returns the
// bracketed product.
inline TermProduct conjugation_shift(const Factorization& fz, int q, int i_q) {
    if (!(1 <= i_q && i_q < q))
        throw std::invalid_argument("conjugation_shift: bad exponent");
    if (!fz.factors.empty()) {
        const ElementaryFactor& last = fz.factors.back();
        if (q - i_q < last.h(last.m()))
            throw std::invalid_argument("conjugation_shift: q - i_q too small");
    }
    TermProduct out;
    for (const auto& f : fz.factors) {
        const FactorStats st = factor_stats(f);
        out.terms.emplace_back(static_cast<int>(st.rho[0] + i_q), i_q);
        for (auto [h, i] : f.pairs) out.terms.emplace_back(h + i_q, i);
    }
    return out;
}

// True iff pi fixes 1..d pointwise; computed by the factor-wise criterion
// maj(pi^{(v)}) = h_1^{(v)} and i_1^{(v)} >= d for every factor.
inline bool fixes_prefix(const CanonicalForm& cf, int d) {
    if (d < 1 || d > cf.degree() - 2)
        throw std::invalid_argument("fixes_prefix: d out of range");
    for (const auto& f : factorize(cf).factors)
        if (f.maj() != f.h(1) || f.i(1) < d) return false;
    return true;
}

// Sufficient commutation criterion: cf2 elementary with maj(cf2) equal to its
// first index and first exponent at least the largest index of cf1.
inline bool commutes_disjoint(const CanonicalForm& cf1, const CanonicalForm& cf2) {
    if (!is_elementary(cf2))
        throw std::invalid_argument("commutes_disjoint: cf2 must be elementary");
    if (cf2.is_identity()) return true;
    if (cf1.is_identity()) return true;
    const auto first2 = *cf2.exponents().begin();
    long long maj2 = 0;
    for (auto [k, e] : cf2.exponents()) maj2 += e;
    const int max1 = cf1.exponents().rbegin()->first;
    return maj2 == first2.first && first2.second >= max1;
}

}  // namespace ogs
