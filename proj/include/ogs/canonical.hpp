#pragma once

// The standard OGS <t_2, ..., t_n> of S_n, with t_m = s_1 s_2 ... s_{m-1}:
// canonical forms, the three-case exchange laws (standard and dual),
// multiplication by pure exchange-law rewriting, and the reduced-word normal
// form of descending runs.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ogs/permutation.hpp"

namespace ogs {

// Unordered intermediate product of non-identity powers of t_k.
struct TermProduct {
    std::vector<std::pair<int, long long>> terms;  // (k, e) with 1 <= e < k
    bool operator==(const TermProduct&) const = default;
};

// The unique product prod_{k=2}^{n} t_k^{i_k} (increasing k) with 0 <= i_k < k.
// Zero exponents are never stored, so structural equality is group equality.
class CanonicalForm {
public:
    explicit CanonicalForm(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("CanonicalForm: degree must be >= 1");
    }

    CanonicalForm(int n, const std::vector<std::pair<int, long long>>& entries)
        : CanonicalForm(n) {
        for (auto [k, e] : entries) set_exponent(k, e);
    }

    int degree() const { return n_; }
    const std::map<int, int>& exponents() const { return exp_; }
    bool is_identity() const { return exp_.empty(); }

    int exponent(int k) const {
        auto it = exp_.find(k);
        return it == exp_.end() ? 0 : it->second;
    }

    // Stores i_k = e mod k, dropping the entry when the reduction is zero.
    // Negative inputs (e.g. t_k^{-1}) are accepted and reduced.
    void set_exponent(int k, long long e) {
        if (k < 2 || k > n_) throw std::invalid_argument("CanonicalForm: index out of range");
        const int r = static_cast<int>(((e % k) + k) % k);
        if (r == 0) exp_.erase(k);
        else exp_[k] = r;
    }

    bool operator==(const CanonicalForm&) const = default;

private:
    int n_;
    std::map<int, int> exp_;
};

// Same exponent constraints, interpreted in decreasing product order
// t_n^{i_n} ... t_2^{i_2}.
class DualCanonicalForm {
public:
    explicit DualCanonicalForm(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("DualCanonicalForm: degree must be >= 1");
    }

    int degree() const { return n_; }
    const std::map<int, int>& exponents() const { return exp_; }

    void set_exponent(int k, long long e) {
        if (k < 2 || k > n_) throw std::invalid_argument("DualCanonicalForm: index out of range");
        const int r = static_cast<int>(((e % k) + k) % k);
        if (r == 0) exp_.erase(k);
        else exp_[k] = r;
    }

    bool operator==(const DualCanonicalForm&) const = default;

private:
    int n_;
    std::map<int, int> exp_;
};

// ---------------------------------------------------------------------------
// Conversions between permutations and canonical forms.

inline Permutation permutation_from_canonical(const CanonicalForm& cf) {
    Permutation p = Permutation::identity(cf.degree());
    for (auto [k, e] : cf.exponents())
        p = compose(p, generator_t_power(k, e, cf.degree()));
    return p;
}

// Peel the top generator: i_n = (n - pi(n)) mod n, then recurse on
// pi * t_n^{-i_n}, which fixes n.
inline CanonicalForm canonical_from_permutation(const Permutation& p) {
    const int n = p.degree();
    CanonicalForm cf(n);
    Permutation cur = p;
    for (int k = n; k >= 2; --k) {
        const int i_k = ((k - cur(k)) % k + k) % k;
        if (i_k != 0) {
            cf.set_exponent(k, i_k);
            cur = compose(cur, generator_t_power(k, -i_k, n));
        }
    }
    if (!(cur == Permutation::identity(n)))
        throw std::logic_error("canonical_from_permutation: peeling failed");
    return cf;
}

inline Permutation permutation_from_dual(const DualCanonicalForm& dcf) {
    Permutation p = Permutation::identity(dcf.degree());
    for (auto it = dcf.exponents().rbegin(); it != dcf.exponents().rend(); ++it)
        p = compose(p, generator_t_power(it->first, it->second, dcf.degree()));
    return p;
}

// Peel the top generator on the left: i_n is the position of the value n.
inline DualCanonicalForm dual_from_permutation(const Permutation& p) {
    const int n = p.degree();
    DualCanonicalForm dcf(n);
    Permutation cur = p;
    for (int k = n; k >= 2; --k) {
        int pos = 0;
        for (int i = 1; i <= k; ++i)
            if (cur(i) == k) { pos = i; break; }
        const int i_k = pos % k;
        if (i_k != 0) {
            dcf.set_exponent(k, i_k);
            cur = compose(generator_t_power(k, -i_k, n), cur);
        }
    }
    if (!(cur == Permutation::identity(n)))
        throw std::logic_error("dual_from_permutation: peeling failed");
    return dcf;
}

// ---------------------------------------------------------------------------
// Exchange laws.

namespace detail {

// Reduce each exponent mod its index, drop identity factors (t_1, t_k^0),
// and merge adjacent equal indices.
inline TermProduct normalize_terms(std::vector<std::pair<int, long long>> raw) {
    TermProduct out;
    for (auto [k, e] : raw) {
        if (k <= 1) continue;
        const long long r = ((e % k) + k) % k;
        if (r == 0) continue;
        if (!out.terms.empty() && out.terms.back().first == k) {
            long long merged = (out.terms.back().second + r) % k;
            if (merged == 0) out.terms.pop_back();
            else out.terms.back().second = merged;
        } else {
            out.terms.emplace_back(k, r);
        }
    }
    return out;
}

}  // namespace detail

// Rewrites t_q^{i_q} * t_p^{i_p} (q > p) as a product of at most three terms
// with strictly increasing indices.  At overlapping case boundaries the first
// listed case is taken; all matching branches produce the same element.
inline TermProduct exchange_standard(int q, int i_q, int p, int i_p) {
    if (!(2 <= p && p < q) || !(1 <= i_p && i_p < p) || !(1 <= i_q && i_q < q))
        throw std::invalid_argument("exchange_standard: precondition violation");
    std::vector<std::pair<int, long long>> raw;
    if (q - i_q >= p) {
        raw = {{i_q + i_p, i_q}, {p + i_q, i_p}, {q, i_q}};
    } else if (q - i_q >= i_p) {  // i_p <= q - i_q <= p
        raw = {{i_q, p + i_q - q}, {i_q + i_p, q - p}, {q, i_q + i_p}};
    } else {  // q - i_q <= i_p
        raw = {{p + i_q - q, i_q + i_p - q}, {i_q, p - i_p}, {q, i_q + i_p - p}};
    }
    return detail::normalize_terms(std::move(raw));
}

// Rewrites t_p^{i_p} * t_q^{i_q} (p < q) as a product of at most three terms
// with strictly decreasing indices (the dual-standard direction).
inline TermProduct exchange_dual(int p, int i_p, int q, int i_q) {
    if (!(2 <= p && p < q) || !(1 <= i_p && i_p < p) || !(1 <= i_q && i_q < q))
        throw std::invalid_argument("exchange_dual: precondition violation");
    std::vector<std::pair<int, long long>> raw;
    if (i_q >= p) {
        raw = {{q, i_q}, {p + q - i_q, q - i_q + i_p}, {q - i_q + p - i_p, p - i_p}};
    } else if (i_q >= p - i_p) {  // p - i_p <= i_q <= p
        raw = {{q, i_q + i_p - p}, {q - i_q + p - i_p, 2 * p - i_p - i_q}, {q - i_q, q - p}};
    } else {  // i_q <= p - i_p
        raw = {{q, i_q + i_p}, {q - i_q, q - i_q - i_p}, {p - i_q, i_p}};
    }
    return detail::normalize_terms(std::move(raw));
}

// ---------------------------------------------------------------------------
// Multiplication by pure exchange-law rewriting.

namespace detail {

// Repeatedly fixes the leftmost adjacent violation (equal indices merge,
// decreasing indices exchange) until the term list is strictly increasing.
// The step cap is a conservative guard; exceeding it signals a rewriting bug.
inline TermProduct sort_terms_by_exchange(TermProduct prod) {
    auto& ts = prod.terms;
    const long long size0 = static_cast<long long>(ts.size()) + 2;
    const long long cap = 1000 + 50 * size0 * size0 * size0;
    long long steps = 0;
    for (std::size_t i = 0; i + 1 < ts.size();) {
        if (ts[i].first < ts[i + 1].first) { ++i; continue; }
        if (++steps > cap)
            throw std::logic_error("sort_terms_by_exchange: step cap exceeded");
        std::vector<std::pair<int, long long>> replacement;
        if (ts[i].first == ts[i + 1].first) {
            replacement = {{ts[i].first, ts[i].second + ts[i + 1].second}};
        } else {
            const TermProduct ex = exchange_standard(
                ts[i].first, static_cast<int>(ts[i].second),
                ts[i + 1].first, static_cast<int>(ts[i + 1].second));
            replacement = ex.terms;
        }
        // Splice, then re-normalize the neighborhood via a fresh pass start.
        std::vector<std::pair<int, long long>> next;
        next.reserve(ts.size() + 2);
        next.insert(next.end(), ts.begin(), ts.begin() + static_cast<std::ptrdiff_t>(i));
        next.insert(next.end(), replacement.begin(), replacement.end());
        next.insert(next.end(), ts.begin() + static_cast<std::ptrdiff_t>(i) + 2, ts.end());
        prod = normalize_terms(std::move(next));
        i = (i == 0) ? 0 : i - 1;
    }
    return prod;
}

}  // namespace detail

// Canonical form of an arbitrary term product, by rewriting only.
inline CanonicalForm canonical_from_terms(int n, const TermProduct& prod) {
    TermProduct sorted = detail::sort_terms_by_exchange(detail::normalize_terms(prod.terms));
    CanonicalForm cf(n);
    for (auto [k, e] : sorted.terms) cf.set_exponent(k, e);
    return cf;
}

// a * b computed purely by exchange-law rewriting (never via permutations).
inline CanonicalForm multiply_canonical(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("multiply_canonical: degree mismatch");
    TermProduct prod;
    for (auto [k, e] : a.exponents()) prod.terms.emplace_back(k, e);
    for (auto [k, e] : b.exponents()) prod.terms.emplace_back(k, e);
    return canonical_from_terms(a.degree(), prod);
}

// ---------------------------------------------------------------------------
// Normal form: the unique reduced word of descending runs
// norm(pi) = prod_{u=1}^{n-1} prod_{r=0}^{y_u - 1} s_{u-r},  0 <= y_u <= u.

struct NormalWord {
    int n = 1;
    std::vector<int> y;  // y_1 .. y_{n-1}

    NormalWord(int degree, std::vector<int> ys) : n(degree), y(std::move(ys)) {
        if (n < 1 || y.size() + 1 != static_cast<std::size_t>(n))
            throw std::invalid_argument("NormalWord: y must have n-1 entries");
        for (int u = 1; u < n; ++u)
            if (y[static_cast<std::size_t>(u - 1)] < 0 || y[static_cast<std::size_t>(u - 1)] > u)
                throw std::invalid_argument("NormalWord: 0 <= y_u <= u violated");
    }

    std::vector<int> letters() const {
        std::vector<int> w;
        for (int u = 1; u < n; ++u)
            for (int r = 0; r < y[static_cast<std::size_t>(u - 1)]; ++r)
                w.push_back(u - r);
        return w;
    }

    long long length() const {
        long long len = 0;
        for (int v : y) len += v;
        return len;
    }

    bool operator==(const NormalWord&) const = default;
};

// y_{n-1} = i_n; descending for j = n-1 .. 2:  y_{j-1} = (y_j + i_j) mod j.
inline NormalWord normal_from_canonical(const CanonicalForm& cf) {
    const int n = cf.degree();
    std::vector<int> y(static_cast<std::size_t>(n - 1), 0);
    if (n >= 2) {
        y[static_cast<std::size_t>(n - 2)] = cf.exponent(n);
        for (int j = n - 1; j >= 2; --j)
            y[static_cast<std::size_t>(j - 2)] =
                (y[static_cast<std::size_t>(j - 1)] + cf.exponent(j)) % j;
    }
    return NormalWord(n, std::move(y));
}

// i_j = y_{j-1} - y_j when y_j <= y_{j-1}, else j + y_{j-1} - y_j; i_n = y_{n-1}.
inline CanonicalForm canonical_from_normal(const NormalWord& w) {
    CanonicalForm cf(w.n);
    if (w.n >= 2) {
        cf.set_exponent(w.n, w.y[static_cast<std::size_t>(w.n - 2)]);
        for (int j = 2; j <= w.n - 1; ++j) {
            const int yj = w.y[static_cast<std::size_t>(j - 1)];
            const int yjm1 = w.y[static_cast<std::size_t>(j - 2)];
            cf.set_exponent(j, yj <= yjm1 ? yjm1 - yj : j + yjm1 - yj);
        }
    }
    return cf;
}

// The longest element omega_n = prod_{j=2}^{n} t_j^{j-1} = [n; n-1; ...; 1].
inline CanonicalForm longest_element(int n) {
    if (n < 2) throw std::invalid_argument("longest_element: n must be >= 2");
    CanonicalForm cf(n);
    for (int k = 2; k <= n; ++k) cf.set_exponent(k, k - 1);
    return cf;
}

// Canonical forms of g * t_k^{+1} * g^{-1} and g * t_k^{-1} * g^{-1} with
// g = t_n t_{n-1} ... t_{k+1}.  The first equals t_{n-k+1}^{-1} * t_n and the
// second equals t_{n-1}^{n-k} * t_n^{k-1}.
inline std::pair<CanonicalForm, CanonicalForm> conjugate_identities_check(int n, int k) {
    if (k < 2 || k > n - 1)
        throw std::invalid_argument("conjugate_identities_check: k out of range");
    Permutation g = Permutation::identity(n);
    for (int j = n; j > k; --j) g = compose(g, generator_t(j, n));
    const Permutation ginv = invert(g);
    const Permutation c1 = compose(compose(g, generator_t(k, n)), ginv);
    const Permutation c2 = compose(compose(g, generator_t_power(k, k - 1, n)), ginv);
    return {canonical_from_permutation(c1), canonical_from_permutation(c2)};
}

}  // namespace ogs
