#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ogs/factorization.hpp"
#include "ogs/text.hpp"
#include "oracle.hpp"

using namespace ogs;

TEST_CASE("elementary recognition") {
    CHECK(is_elementary(parse_canonical("t3 t4^2", 10)));
    CHECK(is_elementary(parse_canonical("t7^2 t9^3 t10^2", 10)));
    CHECK_FALSE(is_elementary(parse_canonical("t3 t4^2 t6^4", 10)));
    CHECK(is_elementary(parse_canonical("e", 10)));
}

TEST_CASE("worked factorization in S_10") {
    const CanonicalForm cf = parse_canonical("t3 t4^2 t6^4 t7^3 t9^3 t10^2", 10);
    const Permutation p = permutation_from_canonical(cf);
    CHECK(p == parse_permutation("[2;6;7;5;10;1;9;3;4;8]"));

    const Factorization fz = factorize(cf);
    CHECK(render_factorization(fz) == "t3 t4^2 | t6^4 t7 | t7^2 t9^3 t10^2");
    REQUIRE(fz.z() == 3);
    CHECK(fz.factors[0].maj() == 3);
    CHECK(fz.factors[1].maj() == 5);
    CHECK(fz.factors[2].maj() == 7);
    CHECK(canonical_from_factorization(fz) == cf);

    CHECK(length_formula(cf) == 20);
    CHECK(coxeter_length(p) == 20);
    CHECK(descents_formula(cf) == std::set<int>{3, 5, 7});
    CHECK(oracle::descent_set(p) == std::set<int>{3, 5, 7});
}

TEST_CASE("factor statistics of t7^2 t9^3 t10^2") {
    const ElementaryFactor f{{{7, 2}, {9, 3}, {10, 2}}};
    const FactorStats st = factor_stats(f);
    CHECK(f.maj() == 7);
    CHECK(st.rho == std::vector<long long>{7, 5, 2});
    CHECK(st.varrho == std::vector<long long>{2, 5, 7});
    CHECK(st.vartheta == std::vector<long long>{0, 2, 3});
}

TEST_CASE("elementary factors have exactly one descent") {
    const ElementaryFactor f{{{6, 4}, {7, 1}}};
    const Permutation p = elementary_eval(f, 10);
    CHECK(p == permutation_from_canonical(parse_canonical("t6^4 t7", 10)));
    CHECK(oracle::descent_set(p) == std::set<int>{5});
}

TEST_CASE("elementary_eval matches the canonical evaluation everywhere") {
    // All elementary forms with up to three terms over indices <= 7.
    for (int n = 3; n <= 7; ++n) {
        for (const auto& p : oracle::all_permutations(n)) {
            const CanonicalForm cf = canonical_from_permutation(p);
            if (!is_elementary(cf) || cf.is_identity()) continue;
            ElementaryFactor f;
            for (auto [k, e] : cf.exponents()) f.pairs.emplace_back(k, e);
            CHECK(elementary_eval(f, n) == p);
            CHECK(oracle::descent_set(p) == std::set<int>{static_cast<int>(f.maj())});
        }
    }
}

TEST_CASE("factorization properties on all of S_6") {
    for (const auto& p : oracle::all_permutations(6)) {
        const CanonicalForm cf = canonical_from_permutation(p);
        const Factorization fz = factorize(cf);
        // Factor majs are strictly increasing and equal the descent set.
        std::set<int> majs;
        for (const auto& f : fz.factors) {
            f.validate();
            majs.insert(static_cast<int>(f.maj()));
        }
        CHECK(majs.size() == fz.factors.size());
        CHECK(majs == oracle::descent_set(p));
        // Re-multiplying the factors recovers the element.
        CHECK(canonical_from_factorization(fz) == cf);
        // Formulas against the oracle.
        CHECK(length_formula(cf) == oracle::inversion_count(p));
        CHECK(descents_formula(cf) == oracle::descent_set(p));
    }
}

TEST_CASE("elementary normal words") {
    CHECK(render_normal(elementary_normal_word(ElementaryFactor{{{3, 1}, {4, 2}}})) ==
          "s3 s2");
    // norm concatenation over the factors equals the full normal word.
    const CanonicalForm cf = parse_canonical("t3 t4^2 t6^4 t7^3 t9^3 t10^2", 10);
    std::vector<int> concat;
    for (const auto& f : factorize(cf).factors) {
        const auto letters = elementary_normal_word(f).letters();
        concat.insert(concat.end(), letters.begin(), letters.end());
    }
    CHECK(concat == normal_from_canonical(cf).letters());
    CHECK(static_cast<long long>(concat.size()) == 20);
}

TEST_CASE("right absorption into an elementary factor") {
    // pi * t_x^{i_x} for x <= h_1 - maj prepends (varrho_1 + i_x, varrho_1)
    // and (varrho_1 + x, i_x).
    const ElementaryFactor f{{{7, 2}, {9, 3}, {10, 2}}};
    for (int x = 2; x <= 5; ++x)  // h_1 - maj = 7 - 7 = 0 would forbid all x,
        CHECK_THROWS(elementary_right_absorb(f, x, 1));
    const ElementaryFactor g{{{9, 2}, {10, 3}}};  // maj = 9? no: 5
    REQUIRE(g.maj() == 5);
    for (int x = 2; x <= 4; ++x)
        for (int ix = 1; ix < x; ++ix) {
            // pi * t_x^{i_x} = prefix * pi.
            const TermProduct tp = elementary_right_absorb(g, x, ix);
            const Permutation lhs =
                compose(elementary_eval(g, 12), generator_t_power(x, ix, 12));
            Permutation rhs = Permutation::identity(12);
            for (auto [k, e] : tp.terms) rhs = compose(rhs, generator_t_power(k, e, 12));
            rhs = compose(rhs, elementary_eval(g, 12));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("conjugation shift across a factorization") {
    // t_q^{i_q} * pi = pi' * t_q^{i_q} when q - i_q is at least the largest
    // index appearing in pi; the shifted factors keep their exponents.
    const CanonicalForm cf = parse_canonical("t3 t4^2", 10);
    const Factorization fz = factorize(cf);
    const int q = 9, iq = 2;  // q - i_q = 7 >= 4
    const TermProduct tp = conjugation_shift(fz, q, iq);
    const Permutation lhs =
        compose(generator_t_power(q, iq, 10), permutation_from_canonical(cf));
    Permutation rhs = Permutation::identity(10);
    for (auto [k, e] : tp.terms) rhs = compose(rhs, generator_t_power(k, e, 10));
    rhs = compose(rhs, generator_t_power(q, iq, 10));
    CHECK(lhs == rhs);
    CHECK_THROWS(conjugation_shift(fz, 5, 3));  // q - i_q = 2 < 4
}

TEST_CASE("prefix fixing criterion") {
    // pi fixes 1..d pointwise iff every factor has maj = h_1 and i_1 >= d.
    const CanonicalForm cf = parse_canonical("t7^2 t9^3 t10^2", 12);
    const Permutation p = permutation_from_canonical(cf);
    for (int d = 1; d <= 10; ++d) {
        bool fixes = true;
        for (int i = 1; i <= d; ++i) fixes = fixes && p(i) == i;
        CHECK(fixes_prefix(cf, d) == fixes);
    }
}

TEST_CASE("disjoint factors commute") {
    // a fixes 1..2 pointwise, b only moves 1..2.
    const CanonicalForm a = parse_canonical("t7^2 t9^3 t10^2", 20);
    const CanonicalForm b = parse_canonical("t2", 20);
    CHECK(commutes_disjoint(b, a));
    CHECK(multiply_canonical(a, b) == multiply_canonical(b, a));
    const CanonicalForm c = parse_canonical("t3", 20);  // moves 1..3
    CHECK_FALSE(commutes_disjoint(c, a));
}
