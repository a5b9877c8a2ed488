#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ogs/inverse.hpp"
#include "ogs/text.hpp"
#include "oracle.hpp"

using namespace ogs;

TEST_CASE("two-term inverse: closed formula versus the oracle") {
    // Frozen example (the i2 = k1 - i1 boundary case).
    CHECK(render_canonical(two_term_inverse(5, 2, 6, 3)) == "t3^2 t6");
    // Every case for k2 <= 8.
    for (int k1 = 2; k1 <= 7; ++k1)
        for (int k2 = k1 + 1; k2 <= 8; ++k2)
            for (int i1 = 1; i1 < k1; ++i1)
                for (int i2 = 1; i2 < k2; ++i2) {
                    const Permutation p = compose(generator_t_power(k1, i1, 8),
                                                  generator_t_power(k2, i2, 8));
                    CHECK(two_term_inverse(k1, i1, k2, i2).exponents() ==
                          canonical_from_permutation(oracle::brute_inverse(p)).exponents());
                }
}

TEST_CASE("single-term inverse is cyclic") {
    CHECK(inverse_canonical(parse_canonical("t7^3", 7)) == parse_canonical("t7^4", 7));
}

TEST_CASE("elementary inverse: worked example in S_24") {
    const ElementaryFactor f{{{17, 9}, {19, 2}, {22, 3}, {24, 3}}};
    const CanonicalForm inv = elementary_inverse(f);
    CHECK(render_canonical(inv) == "t11^9 t13^2 t16^11 t19^5 t21^14 t24^7");
    const CanonicalForm cf = parse_canonical("t17^9 t19^2 t22^3 t24^3", 24);
    const Permutation p = permutation_from_canonical(cf);
    CHECK(p == parse_permutation(
                   "[1;2;3;4;5;6;7;8;9;12;13;17;18;19;22;23;24;10;11;14;15;16;20;21]"));
    CHECK(permutation_from_canonical(inv) == oracle::brute_inverse(p));
    CHECK(oracle::descent_set(oracle::brute_inverse(p)) == std::set<int>{11, 16, 21});
    CHECK(inverse_descents(cf) == std::set<int>{11, 16, 21});
    // The general machinery agrees with the elementary closed form.
    CHECK(inverse_canonical(cf) == inv);
}

TEST_CASE("general inverse: worked example in S_18") {
    const CanonicalForm cf =
        parse_canonical("t9^3 t10^3 t12^5 t13^3 t15^5 t17^2 t18^7", 18);
    const Factorization fz = factorize(cf);
    CHECK(render_factorization(fz) == "t9^3 t10 | t10^2 t12^5 t13^3 | t15^5 t17^2 t18^7");

    const KappaTable kt = build_kappa(fz);
    CHECK(kt.final_minus(1) == std::vector<long long>{11, 16});
    CHECK(kt.final_plus(1) == std::vector<long long>{15, 17});
    CHECK(kt.final_minus(2) == std::vector<long long>{1, 5, 14});
    CHECK(kt.final_plus(2) == std::vector<long long>{3, 13, 17});
    CHECK(kt.final_minus(3) == std::vector<long long>{1, 8, 11});
    CHECK(kt.final_plus(3) == std::vector<long long>{6, 10, 18});

    const ChiEtaTable ce = build_chi_eta(fz, kt);
    CHECK(ce.chi[1] == std::vector<int>{1, 0, 1});
    CHECK(ce.eta[1] == std::vector<long long>{0, 5, 0});
    CHECK(ce.chi[2] == std::vector<int>{1, 1, 2});
    CHECK(ce.eta[2] == std::vector<long long>{2, 2, 0});

    const CanonicalForm inv = inverse_canonical(cf);
    CHECK(render_canonical(inv) ==
          "t5^3 t6^3 t8^3 t10^5 t13^7 t14^6 t15^5 t16^10 t17^9 t18^4");
    CHECK(inverse_descents(cf) == std::set<int>{1, 5, 8, 11, 14, 16});

    const Permutation p = permutation_from_canonical(cf);
    CHECK(permutation_from_canonical(inv) == oracle::brute_inverse(p));
    CHECK(render_factorization(factorize(inv)) ==
          "t5 | t5^2 t6^3 | t8^3 t10^5 | t13^7 t14^4 | t14^2 t15^5 t16^7 | "
          "t16^3 t17^9 t18^4");
}

TEST_CASE("inverse equals the oracle on all of S_6") {
    for (const auto& p : oracle::all_permutations(6)) {
        const CanonicalForm cf = canonical_from_permutation(p);
        const CanonicalForm inv = inverse_canonical(cf);
        CHECK(inv == canonical_from_permutation(oracle::brute_inverse(p)));
        CHECK(inverse_canonical(inv) == cf);
        CHECK(inverse_descents(cf) == oracle::descent_set(oracle::brute_inverse(p)));
    }
}

TEST_CASE("involutions are their own inverse") {
    for (const auto& p : oracle::all_permutations(5)) {
        if (!(compose(p, p) == Permutation::identity(5))) continue;
        const CanonicalForm cf = canonical_from_permutation(p);
        CHECK(inverse_canonical(cf) == cf);
    }
}

TEST_CASE("commuting-factor inverse shortcut") {
    // Each factor has maj = h_1 and the later factor's first exponent covers
    // the earlier factor's top index, so the factors commute.
    const CanonicalForm cf = parse_canonical("t4^2 t6^2 t9^7 t12^2", 12);
    const Factorization fz = factorize(cf);
    REQUIRE(fz.z() == 2);
    const CanonicalForm via_shortcut = commuting_factor_inverse(fz);
    CHECK(via_shortcut == inverse_canonical(cf));
    CHECK(via_shortcut ==
          canonical_from_permutation(oracle::brute_inverse(permutation_from_canonical(cf))));
    // Hypothesis violation is rejected.
    CHECK_THROWS(commuting_factor_inverse(factorize(parse_canonical("t4^2 t9^5 t10^5", 12))));
}
