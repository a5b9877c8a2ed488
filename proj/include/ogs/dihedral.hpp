#pragma once

// Dih(A) for a finitely generated abelian A given by a list of generator
// orders (the distinguished value kInfiniteOrder marks an infinite factor),
// plus the I2(m) specialization and its Coxeter-word correspondence.
//
// Elements are stored in the canonical order  a_1^{i_1} ... a_n^{i_n} b^j
// with each finite-order exponent reduced into [0, order).  The group law in
// that form is  (i_1,...,i_n,j) * (p_1,...,p_n,q) =
// (i_1 + (-1)^j p_1, ..., i_n + (-1)^j p_n, j + q mod 2).

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ogs {

inline constexpr long long kInfiniteOrder = 0;  // sentinel in AbelianBasis::orders

struct AbelianBasis {
    std::vector<long long> orders;  // each >= 2, or kInfiniteOrder

    explicit AbelianBasis(std::vector<long long> ord) : orders(std::move(ord)) {
        if (orders.empty()) throw std::invalid_argument("AbelianBasis: needs >= 1 generator");
        for (long long o : orders)
            if (o != kInfiniteOrder && o < 2)
                throw std::invalid_argument("AbelianBasis: finite order must be >= 2");
    }

    std::size_t rank() const { return orders.size(); }
    bool operator==(const AbelianBasis&) const = default;
};

struct DihedralElement {
    AbelianBasis basis;
    std::vector<long long> exponents;  // reduced into [0, order) for finite orders
    int reflection = 0;                // the exponent j of b

    DihedralElement(AbelianBasis b, std::vector<long long> exps, int refl)
        : basis(std::move(b)), exponents(std::move(exps)), reflection(refl & 1) {
        if (exponents.size() != basis.rank())
            throw std::invalid_argument("DihedralElement: exponent count mismatch");
        for (std::size_t k = 0; k < exponents.size(); ++k) {
            const long long o = basis.orders[k];
            if (o != kInfiniteOrder) exponents[k] = ((exponents[k] % o) + o) % o;
        }
    }

    static DihedralElement identity(const AbelianBasis& b) {
        return DihedralElement(b, std::vector<long long>(b.rank(), 0), 0);
    }

    bool is_identity() const {
        if (reflection != 0) return false;
        for (long long e : exponents)
            if (e != 0) return false;
        return true;
    }

    bool operator==(const DihedralElement&) const = default;
};

inline DihedralElement dih_multiply(const DihedralElement& x, const DihedralElement& y) {
    if (x.basis != y.basis) throw std::invalid_argument("dih_multiply: basis mismatch");
    std::vector<long long> exps(x.exponents.size());
    const long long sign = (x.reflection == 0) ? 1 : -1;
    for (std::size_t k = 0; k < exps.size(); ++k)
        exps[k] = x.exponents[k] + sign * y.exponents[k];
    return DihedralElement(x.basis, std::move(exps), x.reflection + y.reflection);
}

inline DihedralElement dih_inverse(const DihedralElement& x) {
    // Every element with the reflection bit set is an involution.
    if (x.reflection == 1) return x;
    std::vector<long long> exps(x.exponents.size());
    for (std::size_t k = 0; k < exps.size(); ++k) exps[k] = -x.exponents[k];
    return DihedralElement(x.basis, std::move(exps), 0);
}

// ---------------------------------------------------------------------------
// General OGS orderings <a_{perm(1)}, ..., a_{perm(w)}, b, a_{perm(w+1)}, ...>.

struct GeneralOgsOrder {
    std::vector<int> perm;  // bijection on 1..n (1-based generator indices)
    int b_position = 1;     // w: b comes after the w-th listed abelian generator

    GeneralOgsOrder(std::vector<int> p, int w) : perm(std::move(p)), b_position(w) {
        const int n = static_cast<int>(perm.size());
        if (w < 0 || w > n) throw std::invalid_argument("GeneralOgsOrder: bad b position");
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int v : perm) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("GeneralOgsOrder: perm is not a bijection");
            seen[static_cast<std::size_t>(v - 1)] = 1;
        }
    }
};

// One letter of a word in Dih(A): either a power of an abelian generator
// (1-based index) or the involution b (index 0, exponent ignored).
struct DihLetter {
    int generator = 0;      // 0 means b
    long long exponent = 1;
};

struct GeneralOgsTuple {
    std::vector<long long> exponents;  // in the order's listing, positions 1..n
    int reflection = 0;
};

inline DihedralElement dih_evaluate_word(const AbelianBasis& basis,
                                         const std::vector<DihLetter>& word) {
    DihedralElement acc = DihedralElement::identity(basis);
    const int n = static_cast<int>(basis.rank());
    for (const DihLetter& l : word) {
        if (l.generator < 0 || l.generator > n)
            throw std::invalid_argument("dih_evaluate_word: generator outside the basis");
        std::vector<long long> exps(basis.rank(), 0);
        int refl = 0;
        if (l.generator == 0) refl = 1;
        else exps[static_cast<std::size_t>(l.generator - 1)] = l.exponent;
        acc = dih_multiply(acc, DihedralElement(basis, std::move(exps), refl));
    }
    return acc;
}

// Unique exponent tuple of the word under the given general ordering.
// With the element equal to a_1^{i_1}...a_n^{i_n} b^j in the reference order,
// the tuple entry for a listed generator g is i_g before b and (-1)^j i_g
// after b (abelian factors commute; b conjugates by inversion).
inline GeneralOgsTuple dih_canonicalize_general(const AbelianBasis& basis,
                                                const GeneralOgsOrder& order,
                                                const std::vector<DihLetter>& word) {
    if (order.perm.size() != basis.rank())
        throw std::invalid_argument("dih_canonicalize_general: order/basis rank mismatch");
    for (const DihLetter& l : word)
        if (l.generator != 0 &&
            std::find(order.perm.begin(), order.perm.end(), l.generator) == order.perm.end())
            throw std::invalid_argument("dih_canonicalize_general: generator outside the order");
    const DihedralElement e = dih_evaluate_word(basis, word);
    GeneralOgsTuple tup;
    tup.reflection = e.reflection;
    tup.exponents.resize(basis.rank());
    const long long sign = (e.reflection == 0) ? 1 : -1;
    for (std::size_t pos = 0; pos < order.perm.size(); ++pos) {
        const std::size_t g = static_cast<std::size_t>(order.perm[pos] - 1);
        long long v = e.exponents[g];
        if (static_cast<int>(pos) >= order.b_position) v = sign * v;
        const long long o = basis.orders[g];
        if (o != kInfiniteOrder) v = ((v % o) + o) % o;
        tup.exponents[pos] = v;
    }
    return tup;
}

// Evaluates a general-order tuple back to an element (round-trip check).
inline DihedralElement dih_evaluate_general(const AbelianBasis& basis,
                                            const GeneralOgsOrder& order,
                                            const GeneralOgsTuple& tup) {
    std::vector<DihLetter> word;
    for (std::size_t pos = 0; pos < order.perm.size(); ++pos) {
        if (static_cast<int>(pos) == order.b_position && tup.reflection)
            word.push_back(DihLetter{0, 1});
        word.push_back(DihLetter{order.perm[pos], tup.exponents[pos]});
    }
    if (order.b_position == static_cast<int>(order.perm.size()) && tup.reflection)
        word.push_back(DihLetter{0, 1});
    return dih_evaluate_word(basis, word);
}

// ---------------------------------------------------------------------------
// I2(m) = Dih(Z_m) with the OGS <b, a>; b = s1 and b*a = s2.

// Coxeter word (letters 1 and 2 meaning s1, s2) of b^j a^i, case by case.
// For finite m requires 0 <= i < m; m == kInfiniteOrder admits any integer i.
inline std::vector<int> i2m_ogs_to_word(long long i, int j, long long m) {
    if (j != 0 && j != 1) throw std::invalid_argument("i2m_ogs_to_word: j must be 0 or 1");
    if (m != kInfiniteOrder) {
        if (m < 2) throw std::invalid_argument("i2m_ogs_to_word: m must be >= 2");
        if (i < 0 || i >= m) throw std::invalid_argument("i2m_ogs_to_word: i out of range");
    }
    std::vector<int> w;
    auto alternate = [&](int first, long long letters) {
        for (long long x = 0; x < letters; ++x) w.push_back(x % 2 == 0 ? first : 3 - first);
    };
    if (j == 1) {
        if (i == 0) w.push_back(1);                         // b = s1
        else if (i == 1) w.push_back(2);                    // b a = s2
        else if (m == kInfiniteOrder ? i > 1 : 2 * i <= m + 1)
            alternate(2, 2 * i - 1);                        // b a^i = (s2 s1)^{i-1} s2
        else if (m == kInfiniteOrder)
            alternate(1, 2 * (-i) + 1);                     // b a^i = (s1 s2)^{-i} s1, i < 0
        else
            alternate(1, 2 * (m - i) + 1);                  // b a^i = (s1 s2)^{m-i} s1
    } else {
        if (i == 0) { /* empty word */ }
        else if (m == kInfiniteOrder ? i > 0 : 2 * i <= m)
            alternate(1, 2 * i);                            // a^i = (s1 s2)^i
        else if (m == kInfiniteOrder)
            alternate(2, 2 * (-i));                         // a^i = (s2 s1)^{-i}, i < 0
        else
            alternate(2, 2 * (m - i));                      // a^i = (s2 s1)^{m-i}
    }
    return w;
}

// Faithful model of I2(m) on the residues 0..m-1: a(x) = x+1, b(x) = -x,
// applied left-to-right like permutations.  An element is the affine map
// x -> sign*x + shift (mod m).
struct I2Action {
    long long sign = 1;   // +1 or -1
    long long shift = 0;  // reduced mod m
};

inline I2Action i2m_action(long long i, int j, long long m) {
    // b^j a^i acts by x -> (-1)^j x + i.
    I2Action act;
    act.sign = (j == 0) ? 1 : -1;
    act.shift = ((i % m) + m) % m;
    return act;
}

inline I2Action i2m_word_action(const std::vector<int>& word, long long m) {
    I2Action acc;  // identity
    for (int letter : word) {
        // s1: x -> -x;  s2: x -> 1 - x.  Applied after the accumulated map.
        long long c = (letter == 1) ? 0 : 1;
        acc.sign = -acc.sign;
        acc.shift = ((c - acc.shift) % m + m) % m;
    }
    return acc;
}

// OGS-length and Coxeter-word-length histograms over all 2m canonical forms.
struct I2Histograms {
    std::map<long long, long long> ogs;      // length j + i
    std::map<long long, long long> coxeter;  // reduced-word letter count
};

inline I2Histograms i2m_length_histogram(long long m) {
    if (m < 2) throw std::invalid_argument("i2m_length_histogram: m must be >= 2");
    I2Histograms h;
    for (int j = 0; j <= 1; ++j)
        for (long long i = 0; i < m; ++i) {
            h.ogs[i + j] += 1;
            h.coxeter[static_cast<long long>(i2m_ogs_to_word(i, j, m).size())] += 1;
        }
    return h;
}

}  // namespace ogs
