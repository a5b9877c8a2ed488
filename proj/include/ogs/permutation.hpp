#pragma once

// Ground-truth permutation arithmetic and statistics for S_n.
//
// A permutation is stored in one-line notation [pi(1); pi(2); ...; pi(n)]
// with 1-based positions and values.  Multiplication is left-to-right:
// (p * q)(i) = q(p(i)).  All values are immutable and all functions pure.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ogs {

class Permutation {
public:
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        const int n = static_cast<int>(img_.size());
        if (n < 1) throw std::invalid_argument("Permutation: degree must be >= 1");
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int v : img_) {
            if (v < 1 || v > n) throw std::invalid_argument("Permutation: value out of range");
            if (seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("Permutation: repeated value");
            seen[static_cast<std::size_t>(v - 1)] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        return Permutation(std::move(img));
    }

    int degree() const { return static_cast<int>(img_.size()); }

    // pi(i) for 1-based i.
    int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& images() const { return img_; }

    bool operator==(const Permutation& o) const = default;

private:
    std::vector<int> img_;
};

struct DescentStats {
    std::set<int> descents;     // positions i in 1..n-1 with pi(i) > pi(i+1)
    long long major_index = 0;  // sum of descent positions
    long long coxeter_length = 0;  // inversion count
};

// (p * q)(i) = q(p(i)), left-to-right order.
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch");
    const int n = p.degree();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = q(p(i));
    return Permutation(std::move(img));
}

inline Permutation invert(const Permutation& p) {
    const int n = p.degree();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(p(i) - 1)] = i;
    return Permutation(std::move(img));
}

// Number of inversions, which equals the Coxeter length over s_1..s_{n-1}.
inline long long coxeter_length(const Permutation& p) {
    const int n = p.degree();
    long long count = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p(i) > p(j)) ++count;
    return count;
}

inline DescentStats descent_stats(const Permutation& p) {
    DescentStats st;
    for (int i = 1; i < p.degree(); ++i)
        if (p(i) > p(i + 1)) {
            st.descents.insert(i);
            st.major_index += i;
        }
    st.coxeter_length = coxeter_length(p);
    return st;
}

// The adjacent transposition s_i = (i, i+1).
inline Permutation generator_s(int i, int n) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator_s: index out of range");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(i)]);
    return Permutation(std::move(img));
}

// t_m = s_1 s_2 ... s_{m-1} = [m; 1; 2; ...; m-1; m+1; ...; n].
inline Permutation generator_t(int m, int n) {
    if (m < 2 || m > n) throw std::invalid_argument("generator_t: index out of range");
    std::vector<int> img(static_cast<std::size_t>(n));
    img[0] = m;
    for (int i = 2; i <= m; ++i) img[static_cast<std::size_t>(i - 1)] = i - 1;
    for (int i = m + 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = i;
    return Permutation(std::move(img));
}

// t_m^e as a permutation: the e-fold rotation x -> x - e (mod m) on 1..m.
inline Permutation generator_t_power(int m, long long e, int n) {
    if (m < 2 || m > n) throw std::invalid_argument("generator_t_power: index out of range");
    const long long r = ((e % m) + m) % m;
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 1; i <= m; ++i) {
        long long v = i - r;
        if (v < 1) v += m;
        img[static_cast<std::size_t>(i - 1)] = static_cast<int>(v);
    }
    for (int i = m + 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = i;
    return Permutation(std::move(img));
}

// Left-to-right product of adjacent transpositions, indices 1..n-1.
inline Permutation word_to_permutation(const std::vector<int>& word, int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    for (int s : word) {
        if (s < 1 || s >= n) throw std::invalid_argument("word_to_permutation: index out of range");
        // Multiplying on the right by s_i swaps the values i and i+1.
        for (auto& v : img)
            if (v == s) v = s + 1;
            else if (v == s + 1) v = s;
    }
    return Permutation(std::move(img));
}

// ---------------------------------------------------------------------------
// Text forms: "[2;4;1;3]" (also accepted with commas); cycle output "(1,3)(2,4)".

inline Permutation parse_permutation(std::string_view text) {
    std::vector<int> img;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool bracketed = false;
    if (i < text.size() && text[i] == '[') { bracketed = true; ++i; }
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] == ']') { ++i; break; }
        if (text[i] == ';' || text[i] == ',') { ++i; continue; }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("parse_permutation: unexpected character");
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            v = v * 10 + (text[i++] - '0');
        img.push_back(v);
    }
    skip_ws();
    if (bracketed && i < text.size())
        throw std::invalid_argument("parse_permutation: trailing characters");
    return Permutation(std::move(img));
}

inline std::string to_string(const Permutation& p) {
    std::string out = "[";
    for (int i = 1; i <= p.degree(); ++i) {
        if (i > 1) out += ';';
        out += std::to_string(p(i));
    }
    out += ']';
    return out;
}

// Display-only cycle notation; fixed points omitted, identity rendered "()".
inline std::string cycle_string(const Permutation& p) {
    const int n = p.degree();
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    std::string out;
    for (int i = 1; i <= n; ++i) {
        if (done[static_cast<std::size_t>(i - 1)] || p(i) == i) continue;
        out += '(';
        int j = i;
        bool first = true;
        do {
            if (!first) out += ',';
            first = false;
            out += std::to_string(j);
            done[static_cast<std::size_t>(j - 1)] = 1;
            j = p(j);
        } while (j != i);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

}  // namespace ogs
