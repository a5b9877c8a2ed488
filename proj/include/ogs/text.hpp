#pragma once

// Text forms shared by the CLI and the golden tests.
//
//   canonical form   "t2 t3^2 t5^4"      (increasing k; "^1" may be omitted;
//                                         identity renders as "e")
//   dual form        "dual:t5^4 t3^2 t2" (decreasing k)
//   normal word      "s3 s2 | s5 s4"     (run separators are display only)
//   factorization    "t3 t4^2 | t6^4 t7"
//   dihedral element "a1^4 a2^2 b"       (basis "Z9+Z3" or "Zinf")
//   I2(m) element    "b a^3"             (OGS <b, a>; b leading)

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ogs/canonical.hpp"
#include "ogs/dihedral.hpp"
#include "ogs/factorization.hpp"

namespace ogs {

namespace detail {

inline std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) { toks.push_back(cur); cur.clear(); }
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) toks.push_back(cur);
    return toks;
}

// Parses "<name><index>^<exp>" with optional index and "^<exp>".
struct PowerToken {
    std::string name;
    long long index = -1;   // -1 when absent
    long long exponent = 1;
};

inline PowerToken parse_power(const std::string& tok) {
    PowerToken out;
    std::size_t i = 0;
    while (i < tok.size() && std::isalpha(static_cast<unsigned char>(tok[i])))
        out.name += tok[i++];
    if (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
        out.index = 0;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
            out.index = out.index * 10 + (tok[i++] - '0');
    }
    if (i < tok.size() && tok[i] == '^') {
        ++i;
        bool neg = false;
        if (i < tok.size() && (tok[i] == '-' || tok[i] == '+')) neg = (tok[i++] == '-');
        if (i >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[i])))
            throw std::invalid_argument("parse: malformed exponent in '" + tok + "'");
        long long e = 0;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
            e = e * 10 + (tok[i++] - '0');
        out.exponent = neg ? -e : e;
    }
    if (i != tok.size())
        throw std::invalid_argument("parse: trailing characters in '" + tok + "'");
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Canonical forms.

inline CanonicalForm parse_canonical(std::string_view text, int n) {
    std::string s(text);
    if (s.rfind("dual:", 0) == 0)
        throw std::invalid_argument("parse_canonical: got a dual-form expression");
    CanonicalForm cf(n);
    for (const auto& tok : detail::split_tokens(s)) {
        if (tok == "e") continue;
        const auto p = detail::parse_power(tok);
        if (p.name != "t" || p.index < 0)
            throw std::invalid_argument("parse_canonical: expected t<k>[^e], got '" + tok + "'");
        cf.set_exponent(static_cast<int>(p.index),
                        cf.exponent(static_cast<int>(p.index)) + p.exponent);
    }
    return cf;
}

inline DualCanonicalForm parse_dual(std::string_view text, int n) {
    std::string s(text);
    if (s.rfind("dual:", 0) == 0) s = s.substr(5);
    DualCanonicalForm dcf(n);
    for (const auto& tok : detail::split_tokens(s)) {
        if (tok == "e") continue;
        const auto p = detail::parse_power(tok);
        if (p.name != "t" || p.index < 0)
            throw std::invalid_argument("parse_dual: expected t<k>[^e], got '" + tok + "'");
        dcf.set_exponent(static_cast<int>(p.index),
                         dcf.exponents().count(static_cast<int>(p.index))
                             ? dcf.exponents().at(static_cast<int>(p.index)) + p.exponent
                             : p.exponent);
    }
    return dcf;
}

inline std::string render_canonical(const CanonicalForm& cf) {
    if (cf.is_identity()) return "e";
    std::string out;
    for (auto [k, e] : cf.exponents()) {
        if (!out.empty()) out += ' ';
        out += 't' + std::to_string(k);
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
}

inline std::string render_dual(const DualCanonicalForm& dcf) {
    std::string out = "dual:";
    if (dcf.exponents().empty()) return out + "e";
    bool first = true;
    for (auto it = dcf.exponents().rbegin(); it != dcf.exponents().rend(); ++it) {
        if (!first) out += ' ';
        first = false;
        out += 't' + std::to_string(it->first);
        if (it->second != 1) out += '^' + std::to_string(it->second);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Normal words.

inline std::string render_normal(const NormalWord& w) {
    std::string out;
    bool any = false;
    for (int u = 1; u < w.n; ++u) {
        const int yu = w.y[static_cast<std::size_t>(u - 1)];
        if (yu == 0) continue;
        if (any) out += " | ";
        any = true;
        for (int r = 0; r < yu; ++r) {
            if (r > 0) out += ' ';
            out += 's' + std::to_string(u - r);
        }
    }
    return any ? out : "e";
}

// Accepts plain s_i sequences; '|' separators are ignored.
inline std::vector<int> parse_letters(std::string_view text) {
    std::vector<int> letters;
    std::string cleaned;
    for (char c : text) cleaned += (c == '|') ? ' ' : c;
    for (const auto& tok : detail::split_tokens(cleaned)) {
        if (tok == "e") continue;
        const auto p = detail::parse_power(tok);
        if (p.name != "s" || p.index < 1 || p.exponent != 1)
            throw std::invalid_argument("parse_letters: expected s<i>, got '" + tok + "'");
        letters.push_back(static_cast<int>(p.index));
    }
    return letters;
}

// ---------------------------------------------------------------------------
// Factorizations.

inline std::string render_factorization(const Factorization& fz) {
    if (fz.factors.empty()) return "e";
    std::string out;
    for (const auto& f : fz.factors) {
        if (!out.empty()) out += " | ";
        bool first = true;
        for (auto [k, e] : f.pairs) {
            if (!first) out += ' ';
            first = false;
            out += 't' + std::to_string(k);
            if (e != 1) out += '^' + std::to_string(e);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dihedral groups.

// "Z9+Z3" or "Zinf+Z4" -> list of orders (kInfiniteOrder for Zinf).
inline AbelianBasis parse_basis(std::string_view text) {
    std::vector<long long> orders;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw std::invalid_argument("parse_basis: empty factor");
        if (cur == "Zinf") orders.push_back(kInfiniteOrder);
        else if (cur.size() > 1 && cur[0] == 'Z') {
            const long long o = std::stoll(cur.substr(1));
            // Only "Zinf" spells the infinite order; a literal 0 would collide
            // with the sentinel.
            if (o < 2) throw std::invalid_argument("parse_basis: order must be >= 2");
            orders.push_back(o);
        }
        else throw std::invalid_argument("parse_basis: bad factor '" + cur + "'");
        cur.clear();
    };
    for (char c : text) {
        if (c == '+') flush();
        else if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
    }
    flush();
    return AbelianBasis(std::move(orders));
}

// "a1^4 a2^2 b" in the canonical trailing-b order.  A bare "a" means a1.
inline DihedralElement parse_dihedral(std::string_view text, const AbelianBasis& basis) {
    std::vector<DihLetter> word;
    for (const auto& tok : detail::split_tokens(std::string(text))) {
        if (tok == "e") continue;
        const auto p = detail::parse_power(tok);
        if (p.name == "b" && p.index < 0) {
            if (p.exponent % 2 != 0) word.push_back(DihLetter{0, 1});
        } else if (p.name == "a") {
            const int g = (p.index < 0) ? 1 : static_cast<int>(p.index);
            word.push_back(DihLetter{g, p.exponent});
        } else {
            throw std::invalid_argument("parse_dihedral: bad token '" + tok + "'");
        }
    }
    return dih_evaluate_word(basis, word);
}

inline std::string render_dihedral(const DihedralElement& x) {
    std::string out;
    for (std::size_t k = 0; k < x.exponents.size(); ++k) {
        if (x.exponents[k] == 0) continue;
        if (!out.empty()) out += ' ';
        out += 'a' + std::to_string(k + 1);
        if (x.exponents[k] != 1) out += '^' + std::to_string(x.exponents[k]);
    }
    if (x.reflection) {
        if (!out.empty()) out += ' ';
        out += 'b';
    }
    return out.empty() ? "e" : out;
}

// I2(m) text uses the OGS <b, a>: "b a^3" means b * a^3.
// Internally b^j a^i = a^{-i} b^j in the trailing-b representation.
inline DihedralElement parse_i2(std::string_view text, long long m) {
    const AbelianBasis basis({m});
    std::vector<DihLetter> word;
    for (const auto& tok : detail::split_tokens(std::string(text))) {
        if (tok == "e") continue;
        const auto p = detail::parse_power(tok);
        if (p.name == "b" && p.index < 0) {
            if (p.exponent % 2 != 0) word.push_back(DihLetter{0, 1});
        } else if (p.name == "a" && (p.index < 0 || p.index == 1)) {
            word.push_back(DihLetter{1, p.exponent});
        } else {
            throw std::invalid_argument("parse_i2: bad token '" + tok + "'");
        }
    }
    return dih_evaluate_word(basis, word);
}

inline std::string render_i2(const DihedralElement& x) {
    const long long m = x.basis.orders[0];
    long long i = x.exponents[0];
    if (x.reflection) i = ((-i) % m + m) % m;  // b a^i = a^{-i} b
    std::string out;
    if (x.reflection) out = "b";
    if (i != 0) {
        if (!out.empty()) out += ' ';
        out += 'a';
        if (i != 1) out += '^' + std::to_string(i);
    }
    return out.empty() ? "e" : out;
}

}  // namespace ogs
