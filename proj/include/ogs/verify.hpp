#pragma once

// Verification suites driving the library's invariants against the
// brute-force permutation oracle.  Exhaustive for small n, randomized with a
// fixed reported seed above.  Suites may fan out across workers (capped by
// the OGS_VERIFY_WORKERS environment variable); results are combined by a
// deterministic reduction keeping the lowest-indexed counterexample.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ogs/canonical.hpp"
#include "ogs/dihedral.hpp"
#include "ogs/factorization.hpp"
#include "ogs/inverse.hpp"
#include "ogs/permutation.hpp"
#include "ogs/text.hpp"

namespace ogs {

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// The index-th permutation of S_n (0 <= index < n!) via the Lehmer code.
inline Permutation unrank_permutation(long long index, int n) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(n));
    long long f = factorial(n);
    for (int i = n; i >= 1; --i) {
        f /= i;
        const long long d = index / f;
        index %= f;
        img.push_back(pool[static_cast<std::size_t>(d)]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return Permutation(std::move(img));
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> d(0, i);
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(d(rng))]);
    }
    return Permutation(std::move(img));
}

struct SuiteReport {
    long long checks = 0;
    long long failures = 0;
    std::string first_counterexample;  // empty when all checks pass
};

inline int verify_worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("OGS_VERIFY_WORKERS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

// Runs check(i) for i in [0, count); check returns an error description or
// nullopt.  Deterministic: the reported counterexample has the lowest index.
inline SuiteReport run_indexed_checks(
    long long count, const std::function<std::optional<std::string>(long long)>& check) {
    const int workers = static_cast<int>(std::min<long long>(verify_worker_count(), std::max<long long>(count, 1)));
    std::vector<long long> fail_count(static_cast<std::size_t>(workers), 0);
    std::vector<long long> first_index(static_cast<std::size_t>(workers), -1);
    std::vector<std::string> first_msg(static_cast<std::size_t>(workers));
    auto work = [&](int w) {
        for (long long i = w; i < count; i += workers) {
            const auto err = check(i);
            if (err) {
                ++fail_count[static_cast<std::size_t>(w)];
                if (first_index[static_cast<std::size_t>(w)] < 0) {
                    first_index[static_cast<std::size_t>(w)] = i;
                    first_msg[static_cast<std::size_t>(w)] = *err;
                }
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    SuiteReport rep;
    rep.checks = count;
    long long best = -1;
    for (int w = 0; w < workers; ++w) {
        rep.failures += fail_count[static_cast<std::size_t>(w)];
        if (first_index[static_cast<std::size_t>(w)] >= 0 &&
            (best < 0 || first_index[static_cast<std::size_t>(w)] < best)) {
            best = first_index[static_cast<std::size_t>(w)];
            rep.first_counterexample = first_msg[static_cast<std::size_t>(w)];
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Individual suites.

// Canonical <-> permutation round trips, both directions.
inline SuiteReport suite_roundtrip(int n) {
    return run_indexed_checks(factorial(n), [n](long long i) -> std::optional<std::string> {
        const Permutation p = unrank_permutation(i, n);
        const CanonicalForm cf = canonical_from_permutation(p);
        if (!(permutation_from_canonical(cf) == p))
            return "canonical round trip failed for " + to_string(p);
        const DualCanonicalForm dcf = dual_from_permutation(p);
        if (!(permutation_from_dual(dcf) == p))
            return "dual round trip failed for " + to_string(p);
        return std::nullopt;
    });
}

// length_formula equals the oracle inversion count.
inline SuiteReport suite_length(int n) {
    return run_indexed_checks(factorial(n), [n](long long i) -> std::optional<std::string> {
        const Permutation p = unrank_permutation(i, n);
        if (length_formula(canonical_from_permutation(p)) != coxeter_length(p))
            return "length formula mismatch for " + to_string(p);
        return std::nullopt;
    });
}

// descents_formula equals the oracle descent set.
inline SuiteReport suite_descents(int n) {
    return run_indexed_checks(factorial(n), [n](long long i) -> std::optional<std::string> {
        const Permutation p = unrank_permutation(i, n);
        if (descents_formula(canonical_from_permutation(p)) != descent_stats(p).descents)
            return "descent formula mismatch for " + to_string(p);
        return std::nullopt;
    });
}

// The exponent sum of the canonical form is the major index.
inline SuiteReport suite_maj(int n) {
    return run_indexed_checks(factorial(n), [n](long long i) -> std::optional<std::string> {
        const Permutation p = unrank_permutation(i, n);
        const CanonicalForm cf = canonical_from_permutation(p);
        long long sum = 0;
        for (auto [k, e] : cf.exponents()) sum += e;
        if (sum != descent_stats(p).major_index)
            return "maj mismatch for " + to_string(p);
        return std::nullopt;
    });
}

// inverse_canonical equals the oracle inverse (and is an involution).
inline SuiteReport suite_inverse(int n) {
    return run_indexed_checks(factorial(n), [n](long long i) -> std::optional<std::string> {
        const Permutation p = unrank_permutation(i, n);
        const CanonicalForm cf = canonical_from_permutation(p);
        const CanonicalForm inv = inverse_canonical(cf);
        if (!(inv == canonical_from_permutation(invert(p))))
            return "inverse mismatch for " + to_string(p);
        if (!(inverse_canonical(inv) == cf))
            return "double inverse mismatch for " + to_string(p);
        if (inverse_descents(cf) != descent_stats(invert(p)).descents)
            return "inverse descent mismatch for " + to_string(p);
        return std::nullopt;
    });
}

// Normal words are reduced, evaluate correctly, and concatenate per factor.
inline SuiteReport suite_normal(int n) {
    return run_indexed_checks(factorial(n), [n](long long i) -> std::optional<std::string> {
        const Permutation p = unrank_permutation(i, n);
        const CanonicalForm cf = canonical_from_permutation(p);
        const NormalWord w = normal_from_canonical(cf);
        const auto letters = w.letters();
        if (!(word_to_permutation(letters, n) == p))
            return "normal word evaluation mismatch for " + to_string(p);
        if (static_cast<long long>(letters.size()) != coxeter_length(p))
            return "normal word not reduced for " + to_string(p);
        if (!(canonical_from_normal(w) == cf))
            return "normal round trip mismatch for " + to_string(p);
        std::vector<int> concat;
        for (const auto& f : factorize(cf).factors) {
            const auto fl = elementary_normal_word(f).letters();
            concat.insert(concat.end(), fl.begin(), fl.end());
        }
        if (concat != letters)
            return "factor norm concatenation mismatch for " + to_string(p);
        return std::nullopt;
    });
}

// Exchange-law multiplication equals oracle composition on all ordered pairs.
inline SuiteReport suite_multiply(int n) {
    const long long fn = factorial(n);
    return run_indexed_checks(fn * fn, [n, fn](long long i) -> std::optional<std::string> {
        const Permutation a = unrank_permutation(i / fn, n);
        const Permutation b = unrank_permutation(i % fn, n);
        const CanonicalForm prod =
            multiply_canonical(canonical_from_permutation(a), canonical_from_permutation(b));
        if (!(prod == canonical_from_permutation(compose(a, b))))
            return "product mismatch for " + to_string(a) + " * " + to_string(b);
        return std::nullopt;
    });
}

// Exchange laws for all 2 <= p < q <= q_max and all legal exponents:
// soundness, term bounds/ordering, and the exact two-term degeneracy rule.
inline SuiteReport suite_exchange(int q_max);

// kappa/chi/eta invariants (ordering, disjointness, extremality, zero rule,
// bracketing, eta < varrho, adjacency, inverse factorization structure).
inline SuiteReport suite_kappa(int n);

// Dihedral group laws for all finite bases with |Dih(A)| <= 2*order_cap.
inline SuiteReport suite_dihedral(long long order_cap = 36);

// I2(m) histograms and OGS <-> Coxeter word agreement for 2 <= m <= m_max.
inline SuiteReport suite_i2(long long m_max = 50);

// Randomized large-n inversion.
inline SuiteReport suite_inverse_random(int n, long long count, std::uint64_t seed) {
    return run_indexed_checks(count, [n, seed](long long i) -> std::optional<std::string> {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ULL);
        const Permutation p = random_permutation(n, rng);
        const CanonicalForm cf = canonical_from_permutation(p);
        const CanonicalForm inv = inverse_canonical(cf);
        if (!(inv == canonical_from_permutation(invert(p))))
            return "inverse mismatch for " + to_string(p);
        if (!(inverse_canonical(inv) == cf))
            return "double inverse mismatch for " + to_string(p);
        return std::nullopt;
    });
}

// ---------------------------------------------------------------------------
// Out-of-line suite bodies.

inline SuiteReport suite_exchange(int q_max) {
    // Index all (q, i_q, p, i_p) tuples densely.
    std::vector<std::array<int, 4>> tuples;
    for (int q = 3; q <= q_max; ++q)
        for (int p = 2; p < q; ++p)
            for (int iq = 1; iq < q; ++iq)
                for (int ip = 1; ip < p; ++ip) tuples.push_back({q, iq, p, ip});
    return run_indexed_checks(
        static_cast<long long>(tuples.size()),
        [&tuples, q_max](long long idx) -> std::optional<std::string> {
            const auto [q, iq, p, ip] = tuples[static_cast<std::size_t>(idx)];
            const int n = q_max;
            const std::string tag = "q=" + std::to_string(q) + " i_q=" + std::to_string(iq) +
                                    " p=" + std::to_string(p) + " i_p=" + std::to_string(ip);
            // Standard: t_q^{i_q} t_p^{i_p}.
            const TermProduct st = exchange_standard(q, iq, p, ip);
            if (st.terms.size() > 3) return "standard exchange: >3 terms at " + tag;
            for (std::size_t x = 0; x + 1 < st.terms.size(); ++x)
                if (st.terms[x].first >= st.terms[x + 1].first)
                    return "standard exchange: order violation at " + tag;
            Permutation lhs = compose(generator_t_power(q, iq, n), generator_t_power(p, ip, n));
            Permutation rhs = Permutation::identity(n);
            for (auto [k, e] : st.terms) rhs = compose(rhs, generator_t_power(k, e, n));
            if (!(lhs == rhs)) return "standard exchange: wrong element at " + tag;
            const bool degen = (q - iq == p) || (q - iq == ip);
            if ((st.terms.size() == 2) != degen)
                return "standard exchange: two-term rule violated at " + tag;
            // Dual: t_p^{i_p} t_q^{i_q}.
            const TermProduct du = exchange_dual(p, ip, q, iq);
            if (du.terms.size() > 3) return "dual exchange: >3 terms at " + tag;
            for (std::size_t x = 0; x + 1 < du.terms.size(); ++x)
                if (du.terms[x].first <= du.terms[x + 1].first)
                    return "dual exchange: order violation at " + tag;
            lhs = compose(generator_t_power(p, ip, n), generator_t_power(q, iq, n));
            rhs = Permutation::identity(n);
            for (auto [k, e] : du.terms) rhs = compose(rhs, generator_t_power(k, e, n));
            if (!(lhs == rhs)) return "dual exchange: wrong element at " + tag;
            const bool ddegen = (iq == p) || (iq == p - ip);
            if ((du.terms.size() == 2) != ddegen)
                return "dual exchange: two-term rule violated at " + tag;
            return std::nullopt;
        });
}

namespace detail {

// All kappa invariant checks for one canonical form; returns an error or nullopt.
inline std::optional<std::string> check_kappa_invariants(const CanonicalForm& cf) {
    if (cf.is_identity()) return std::nullopt;
    const Factorization fz = factorize(cf);
    const KappaTable kt = build_kappa(fz);
    const ChiEtaTable ce = build_chi_eta(fz, kt);
    const int z = fz.z();
    const std::string tag = " for " + render_canonical(cf);

    // order-kappa: within each (v, r) slice, minus < plus and plus_j < minus_{j+1}.
    for (int v = 1; v <= z; ++v)
        for (std::size_t ri = 0; ri < kt.minus[static_cast<std::size_t>(v - 1)].size(); ++ri) {
            const auto& km = kt.minus[static_cast<std::size_t>(v - 1)][ri];
            const auto& kp = kt.plus[static_cast<std::size_t>(v - 1)][ri];
            for (std::size_t j = 0; j < km.size(); ++j) {
                if (!(km[j] < kp[j])) return "order-kappa (minus<plus) fails" + tag;
                if (j + 1 < km.size() && !(kp[j] < km[j + 1]))
                    return "order-kappa (plus<next minus) fails" + tag;
            }
        }
    // no-common-eps12 on final values.
    {
        std::set<long long> minus_vals, plus_vals;
        for (int v = 1; v <= z; ++v) {
            for (long long x : kt.final_minus(v)) minus_vals.insert(x);
            for (long long x : kt.final_plus(v)) plus_vals.insert(x);
        }
        for (long long x : minus_vals)
            if (plus_vals.count(x)) return "no-common-eps12 fails" + tag;
        // max-min-kappa.
        const long long global_max = *plus_vals.rbegin();
        const long long global_min = *minus_vals.begin();
        if (kt.final_plus(z).back() != global_max) return "max-min-kappa (max) fails" + tag;
        if (kt.final_minus(z).front() != global_min) return "max-min-kappa (min) fails" + tag;
    }
    // kappa-zero: a zero final kappa- only at j = 1.
    for (int v = 1; v <= z; ++v) {
        const auto& km = kt.final_minus(v);
        for (std::size_t j = 0; j < km.size(); ++j)
            if (km[j] == 0 && j != 0) return "kappa-zero fails" + tag;
    }
    // v1-x-v2 bracketing: for v < w, every final kappa^{(v)} value lies in
    // some [kappa^{(w)}_{-;j'}, kappa^{(w)}_{+;j'}) window.
    for (int v = 1; v <= z; ++v)
        for (int w = v + 1; w <= z; ++w) {
            const auto& wm = kt.final_minus(w);
            const auto& wp = kt.final_plus(w);
            auto bracketed = [&](long long x) {
                for (std::size_t j = 0; j < wm.size(); ++j)
                    if (wm[j] <= x && x < wp[j]) return true;
                return false;
            };
            for (long long x : kt.final_minus(v))
                if (!bracketed(x)) return "v1-x-v2 (minus) fails" + tag;
            for (long long x : kt.final_plus(v))
                if (!bracketed(x - 1) && !bracketed(x)) {
                    // plus values satisfy kappa_- < x <= kappa_+.
                    bool ok = false;
                    for (std::size_t j = 0; j < wm.size(); ++j)
                        if (wm[j] < x && x <= wp[j]) ok = true;
                    if (!ok) return "v1-x-v2 (plus) fails" + tag;
                }
        }
    // eta-varrho: eta^{(v)}_j < varrho^{(v)}_j.
    for (int v = 1; v <= z; ++v) {
        const FactorStats st = factor_stats(fz.factors[static_cast<std::size_t>(v - 1)]);
        for (std::size_t j = 0; j < st.varrho.size(); ++j)
            if (!(ce.eta[static_cast<std::size_t>(v - 1)][j] < st.varrho[j]))
                return "eta-varrho fails" + tag;
    }
    // kappa-adjacent on the sorted merged sequence with the stated tie-breaks.
    {
        struct Entry { long long val; int v; int j; bool plus; };
        std::vector<Entry> seq;
        for (int v = 1; v <= z; ++v) {
            const auto& km = kt.final_minus(v);
            const auto& kp = kt.final_plus(v);
            for (std::size_t j = 0; j < km.size(); ++j) {
                seq.push_back({km[j], v, static_cast<int>(j + 1), false});
                seq.push_back({kp[j], v, static_cast<int>(j + 1), true});
            }
        }
        std::stable_sort(seq.begin(), seq.end(), [](const Entry& a, const Entry& b) {
            if (a.val != b.val) return a.val < b.val;
            if (a.plus != b.plus) return !a.plus;  // arbitrary; equal mixed signs cannot occur
            return a.plus ? a.v < b.v : a.v > b.v;
        });
        if (!(seq.front().val == kt.final_minus(z).front() && !seq.front().plus))
            return "kappa-adjacent (first element) fails" + tag;
        if (!(seq.back().val == kt.final_plus(z).back() && seq.back().plus))
            return "kappa-adjacent (last element) fails" + tag;
        auto chi_of = [&](int v, int j) {
            return ce.chi[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(j - 1)];
        };
        for (std::size_t x = 0; x + 1 < seq.size(); ++x) {
            const Entry& a = seq[x];
            const Entry& b = seq[x + 1];
            if (a.plus && !b.plus) {
                // plus followed by minus: same v, j+1 (strictly larger value here,
                // since a plus and a minus value can never be equal).
                if (!(b.v == a.v && b.j == a.j + 1))
                    return "kappa-adjacent (plus,minus) fails" + tag;
            } else if (a.plus && b.plus && b.val > a.val) {
                if (!(b.v > a.v && chi_of(b.v, b.j) == a.v))
                    return "kappa-adjacent (plus,plus) fails" + tag;
            } else if (!a.plus && !b.plus && b.val > a.val) {
                if (!(a.v > b.v)) return "kappa-adjacent (minus,minus order) fails" + tag;
                if (a.j >= 2 && chi_of(a.v, a.j - 1) != b.v)
                    return "kappa-adjacent (minus,minus chi) fails" + tag;
            } else if (!a.plus && b.plus) {
                const bool same = (b.v == a.v && b.j == a.j);
                if (!same && a.j >= 2 && chi_of(a.v, a.j - 1) != chi_of(b.v, b.j))
                    return "kappa-adjacent (minus,plus) fails" + tag;
            }
        }
    }
    // inverse-factorization structure of the computed inverse.
    {
        const CanonicalForm inv = inverse_canonical(cf);
        std::set<long long> minus_nonzero;
        std::set<long long> plus_vals;
        for (int v = 1; v <= z; ++v) {
            for (long long x : kt.final_minus(v))
                if (x != 0) minus_nonzero.insert(x);
            for (long long x : kt.final_plus(v)) plus_vals.insert(x);
        }
        const Factorization ifz = factorize(inv);
        if (ifz.z() != static_cast<int>(minus_nonzero.size()))
            return "inverse-factorization (factor count) fails" + tag;
        for (const auto& f : ifz.factors)
            if (!minus_nonzero.count(f.maj()))
                return "inverse-factorization (maj is kappa-) fails" + tag;
        for (auto [k, e] : inv.exponents())
            if (!minus_nonzero.count(k) && !plus_vals.count(k))
                return "inverse-factorization (key origin) fails" + tag;
    }
    return std::nullopt;
}

}  // namespace detail

inline SuiteReport suite_kappa(int n) {
    return run_indexed_checks(factorial(n), [n](long long i) -> std::optional<std::string> {
        return detail::check_kappa_invariants(
            canonical_from_permutation(unrank_permutation(i, n)));
    });
}

inline SuiteReport suite_kappa_random(int n, long long count, std::uint64_t seed) {
    return run_indexed_checks(count, [n, seed](long long i) -> std::optional<std::string> {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ULL);
        return detail::check_kappa_invariants(
            canonical_from_permutation(random_permutation(n, rng)));
    });
}

inline SuiteReport suite_dihedral(long long order_cap) {
    // All finite bases with <= 3 generators and |A| <= order_cap.
    std::vector<AbelianBasis> bases;
    for (long long o1 = 2; o1 <= order_cap; ++o1) {
        bases.push_back(AbelianBasis({o1}));
        for (long long o2 = 2; o1 * o2 <= order_cap; ++o2) {
            bases.push_back(AbelianBasis({o1, o2}));
            for (long long o3 = 2; o1 * o2 * o3 <= order_cap; ++o3)
                bases.push_back(AbelianBasis({o1, o2, o3}));
        }
    }
    return run_indexed_checks(
        static_cast<long long>(bases.size()),
        [&bases](long long bi) -> std::optional<std::string> {
            const AbelianBasis& basis = bases[static_cast<std::size_t>(bi)];
            long long size = 2;
            for (long long o : basis.orders) size *= o;
            std::vector<DihedralElement> all;
            all.reserve(static_cast<std::size_t>(size));
            std::vector<long long> exps(basis.rank(), 0);
            for (int refl = 0; refl <= 1; ++refl) {
                std::fill(exps.begin(), exps.end(), 0);
                while (true) {
                    all.emplace_back(basis, exps, refl);
                    std::size_t k = 0;
                    while (k < exps.size() && ++exps[k] == basis.orders[k]) exps[k++] = 0;
                    if (k == exps.size()) break;
                }
            }
            const DihedralElement id = DihedralElement::identity(basis);
            for (const auto& x : all) {
                const DihedralElement xi = dih_inverse(x);
                if (!(dih_multiply(x, xi) == id) || !(dih_multiply(xi, x) == id))
                    return "dihedral inverse law fails for " + render_dihedral(x);
                if (x.reflection == 1 && !(dih_multiply(x, x) == id))
                    return "dihedral involution fails for " + render_dihedral(x);
            }
            // Associativity: exhaustive on all triples for |G| <= 36,
            // a fixed pseudo-random sample above.
            if (size <= 36) {
                for (const auto& x : all)
                    for (const auto& y : all)
                        for (const auto& w : all)
                            if (!(dih_multiply(dih_multiply(x, y), w) ==
                                  dih_multiply(x, dih_multiply(y, w))))
                                return "dihedral associativity fails";
            } else {
                std::mt19937_64 rng(0xD1EDA1ULL + static_cast<std::uint64_t>(bi));
                std::uniform_int_distribution<std::size_t> d(0, all.size() - 1);
                for (int trial = 0; trial < 500; ++trial) {
                    const auto& x = all[d(rng)];
                    const auto& y = all[d(rng)];
                    const auto& w = all[d(rng)];
                    if (!(dih_multiply(dih_multiply(x, y), w) ==
                          dih_multiply(x, dih_multiply(y, w))))
                        return "dihedral associativity fails";
                }
            }
            return std::nullopt;
        });
}

inline SuiteReport suite_i2(long long m_max) {
    return run_indexed_checks(m_max - 1, [](long long idx) -> std::optional<std::string> {
        const long long m = idx + 2;
        const std::string tag = " for m=" + std::to_string(m);
        const I2Histograms h = i2m_length_histogram(m);
        std::map<long long, long long> expected;
        expected[0] = 1;
        for (long long l = 1; l < m; ++l) expected[l] = 2;
        expected[m] = 1;
        if (h.ogs != expected) return "I2 OGS histogram mismatch" + tag;
        if (h.coxeter != expected) return "I2 Coxeter histogram mismatch" + tag;
        for (int j = 0; j <= 1; ++j)
            for (long long i = 0; i < m; ++i) {
                const auto word = i2m_ogs_to_word(i, j, m);
                const I2Action lhs = i2m_action(i, j, m);
                const I2Action rhs = i2m_word_action(word, m);
                if (lhs.sign != rhs.sign || lhs.shift != rhs.shift)
                    return "I2 word evaluation mismatch" + tag + " i=" + std::to_string(i) +
                           " j=" + std::to_string(j);
                // Per-case reduced length.
                long long expect_len;
                if (j == 0) expect_len = (2 * i <= m) ? 2 * i : 2 * (m - i);
                else if (i == 0) expect_len = 1;
                else expect_len = (2 * i <= m + 1) ? 2 * i - 1 : 2 * (m - i) + 1;
                if (static_cast<long long>(word.size()) != expect_len)
                    return "I2 word length mismatch" + tag + " i=" + std::to_string(i) +
                           " j=" + std::to_string(j);
            }
        return std::nullopt;
    });
}

}  // namespace ogs
