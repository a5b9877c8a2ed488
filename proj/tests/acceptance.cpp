// Acceptance harness: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "ogs/canonical.hpp"
#include "ogs/dihedral.hpp"
#include "ogs/factorization.hpp"
#include "ogs/inverse.hpp"
#include "ogs/permutation.hpp"
#include "ogs/text.hpp"
#include "ogs/verify.hpp"
#include "oracle.hpp"

using namespace ogs;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, double seconds,
            const std::string& detail = "") {
    std::cout << "criterion " << number << " (" << name << "): "
              << (ok ? "PASS" : "FAIL") << " [" << seconds << "s]";
    if (!ok && !detail.empty()) std::cout << " - " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

template <typename F>
void criterion(int number, const std::string& name, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        detail = body();
        ok = detail.empty();
    } catch (const std::exception& e) {
        detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, name, ok, secs, detail);
}

std::string reported(const SuiteReport& rep, const std::string& tag) {
    if (rep.failures == 0) return "";
    return tag + ": " + std::to_string(rep.failures) + " failures; first: " +
           rep.first_counterexample;
}

std::string worked_examples() {
    // Product in S_5.
    const CanonicalForm x = parse_canonical("t2 t3^2 t4 t5^4", 5);
    const CanonicalForm y = parse_canonical("t2 t3 t4^2 t5^2", 5);
    if (render_canonical(multiply_canonical(x, y)) != "t2 t3 t5^4")
        return "S_5 product mismatch";
    if (!(permutation_from_canonical(x) == parse_permutation("[3;2;5;4;1]")))
        return "S_5 canonical/permutation mismatch";

    // Normal form in S_9.
    const CanonicalForm s9 = parse_canonical("t2 t3 t4^3 t5^3 t6^2 t7^2 t9^2", 9);
    const NormalWord w = normal_from_canonical(s9);
    if (w.y != std::vector<int>{1, 0, 2, 3, 0, 4, 2, 2}) return "S_9 y-vector mismatch";
    if (!(canonical_from_normal(w) == s9)) return "S_9 normal round trip mismatch";

    // Factorization, length, descents in S_10.
    const CanonicalForm s10 = parse_canonical("t3 t4^2 t6^4 t7^3 t9^3 t10^2", 10);
    if (render_factorization(factorize(s10)) != "t3 t4^2 | t6^4 t7 | t7^2 t9^3 t10^2")
        return "S_10 factorization mismatch";
    if (length_formula(s10) != 20) return "S_10 length mismatch";
    if (descents_formula(s10) != std::set<int>{3, 5, 7}) return "S_10 descents mismatch";
    std::vector<int> concat;
    for (const auto& f : factorize(s10).factors) {
        const auto letters = elementary_normal_word(f).letters();
        concat.insert(concat.end(), letters.begin(), letters.end());
    }
    if (concat != normal_from_canonical(s10).letters()) return "S_10 norm concat mismatch";

    // Elementary inverse in S_24.
    const CanonicalForm s24 = parse_canonical("t17^9 t19^2 t22^3 t24^3", 24);
    if (render_canonical(inverse_canonical(s24)) !=
        "t11^9 t13^2 t16^11 t19^5 t21^14 t24^7")
        return "S_24 elementary inverse mismatch";
    if (inverse_descents(s24) != std::set<int>{11, 16, 21})
        return "S_24 inverse descents mismatch";

    // General inverse in S_18 with its intermediate tables.
    const CanonicalForm s18 =
        parse_canonical("t9^3 t10^3 t12^5 t13^3 t15^5 t17^2 t18^7", 18);
    const Factorization fz = factorize(s18);
    const KappaTable kt = build_kappa(fz);
    if (kt.final_minus(2) != std::vector<long long>{1, 5, 14} ||
        kt.final_plus(3) != std::vector<long long>{6, 10, 18})
        return "S_18 kappa tables mismatch";
    const ChiEtaTable ce = build_chi_eta(fz, kt);
    if (ce.chi[2] != std::vector<int>{1, 1, 2} ||
        ce.eta[1] != std::vector<long long>{0, 5, 0})
        return "S_18 chi/eta tables mismatch";
    if (render_canonical(inverse_canonical(s18)) !=
        "t5^3 t6^3 t8^3 t10^5 t13^7 t14^6 t15^5 t16^10 t17^9 t18^4")
        return "S_18 general inverse mismatch";
    if (inverse_descents(s18) != std::set<int>{1, 5, 8, 11, 14, 16})
        return "S_18 inverse descents mismatch";

    // Dihedral product in Dih(Z9+Z3).
    const AbelianBasis basis = parse_basis("Z9+Z3");
    const DihedralElement d = dih_multiply(parse_dihedral("a1^4 a2^2 b", basis),
                                           parse_dihedral("a1^7 a2 b", basis));
    if (render_dihedral(d) != "a1^6 a2") return "Dih(Z9+Z3) product mismatch";
    return "";
}

std::string s7_exhaustive() {
    for (const auto& [rep, tag] :
         {std::pair{suite_roundtrip(7), "roundtrip"}, {suite_length(7), "length"},
          {suite_descents(7), "descents"}, {suite_maj(7), "maj"},
          {suite_inverse(7), "inverse"}, {suite_normal(7), "normal"}}) {
        const std::string err = reported(rep, tag);
        if (!err.empty()) return err;
    }
    return "";
}

std::string multiplication() {
    std::string err = reported(suite_multiply(5), "S_5 pairs");
    if (!err.empty()) return err;
    // 10^4 random S_8 pairs.
    const SuiteReport rep = run_indexed_checks(10000, [](long long i) {
        std::mt19937_64 rng(0xA5ED5EEDULL + static_cast<std::uint64_t>(i));
        const Permutation a = random_permutation(8, rng);
        const Permutation b = random_permutation(8, rng);
        std::optional<std::string> out;
        if (!(multiply_canonical(canonical_from_permutation(a),
                                 canonical_from_permutation(b)) ==
              canonical_from_permutation(compose(a, b))))
            out = "product mismatch for " + to_string(a) + " * " + to_string(b);
        return out;
    });
    return reported(rep, "random S_8 pairs");
}

std::string exchange_coverage() {
    const std::string err = reported(suite_exchange(9), "exchange q<=9");
    if (!err.empty()) return err;
    long long std_case[3] = {0, 0, 0}, dual_case[3] = {0, 0, 0};
    for (int q = 3; q <= 9; ++q)
        for (int p = 2; p < q; ++p)
            for (int iq = 1; iq < q; ++iq)
                for (int ip = 1; ip < p; ++ip) {
                    if (q - iq >= p) ++std_case[0];
                    else if (ip <= q - iq) ++std_case[1];
                    else ++std_case[2];
                    if (iq >= p) ++dual_case[0];
                    else if (p - ip <= iq) ++dual_case[1];
                    else ++dual_case[2];
                }
    for (int c = 0; c < 3; ++c)
        if (std_case[c] == 0 || dual_case[c] == 0)
            return "exchange case " + std::to_string(c + 1) + " never exercised";
    return "";
}

std::string large_inversion() {
    for (int n : {20, 50}) {
        const std::string err = reported(suite_inverse_random(n, 10000, 20260826),
                                         "S_" + std::to_string(n));
        if (!err.empty()) return err;
    }
    return "";
}

std::string kappa_invariants() {
    std::string err = reported(suite_kappa(7), "S_7 exhaustive");
    if (!err.empty()) return err;
    for (int n : {20, 50}) {
        err = reported(suite_kappa_random(n, 10000, 20260826), "S_" + std::to_string(n));
        if (!err.empty()) return err;
    }
    return "";
}

std::string dihedral_i2() {
    const std::string err = reported(suite_dihedral(36), "Dih(A), |A| <= 36");
    if (!err.empty()) return err;
    return reported(suite_i2(50), "I2(m), m <= 50");
}

std::string nonuniqueness_witness() {
    // In <t3, t4, t2>, the words t4^2 t2 and t3^2 t4^3 both stay in bounds
    // and name the same element of S_4, so the ordered sequence gives no
    // unique presentation.
    const Permutation lhs =
        compose(generator_t_power(4, 2, 4), generator_t_power(2, 1, 4));
    const Permutation rhs =
        compose(generator_t_power(3, 2, 4), generator_t_power(4, 3, 4));
    if (!(lhs == rhs)) return "witness products differ";
    if (!(lhs == parse_permutation("[3;4;2;1]"))) return "witness permutation mismatch";
    return "";
}

}  // namespace

int main() {
    criterion(1, "worked examples", worked_examples);
    criterion(2, "S_7 exhaustive oracle equivalence", s7_exhaustive);
    criterion(3, "multiplication via rewriting", multiplication);
    criterion(4, "exchange-law branch coverage", exchange_coverage);
    criterion(5, "randomized large-n inversion", large_inversion);
    criterion(6, "kappa-machinery invariants", kappa_invariants);
    criterion(7, "dihedral and I2 laws", dihedral_i2);
    criterion(8, "non-uniqueness witness", nonuniqueness_witness);
    if (failures == 0) {
        std::cout << "all 8 criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
