#include "barcomb/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "barcomb/classify.hpp"
#include "barcomb/hooks.hpp"
#include "barcomb/llt.hpp"
#include "barcomb/regularise.hpp"
#include "barcomb/spin.hpp"
#include "barcomb/symfunc.hpp"
#include "barcomb/tableaux.hpp"

namespace barcomb {

namespace {

using Suite = std::function<void(int, std::uint64_t, VerifyReport&)>;

void fail(VerifyReport& r, const std::string& what) {
    if (r.counterexamples.size() < 20) r.counterexamples.push_back(what);
}

void suite_drp(int bound, std::uint64_t, VerifyReport& r) {
    for (int n = 0; n <= bound; ++n)
        for (const Partition& la : strict_partitions(n))
            for (int a = 0; a <= n; ++a) {
                auto [row, col, rhs] = check_drp(la, a);
                r.checked++;
                if (!(row == col && col == rhs))
                    fail(r, "drp fails at λ=" + to_text(la) + " a=" + std::to_string(a));
            }
}

void suite_mainsym(int bound, std::uint64_t seed, VerifyReport& r) {
    for (int ln = 0; ln <= std::min(bound, 5); ++ln)
        for (const Partition& la : all_partitions(ln))
            for (int gn = 0; gn <= 3; ++gn)
                for (const Partition& ga : all_partitions(gn))
                    for (int an = 0; an <= std::min(bound, 5); ++an)
                        for (const Partition& al : strict_partitions(an)) {
                            auto [lhs, rhs] = check_mainsym(la, ga, al);
                            r.checked++;
                            if (lhs != rhs)
                                fail(r, "mainsym fails at λ=" + to_text(la) + " γ=" + to_text(ga) +
                                            " α=" + to_text(al));
                        }
    // Seeded larger triples.
    std::mt19937_64 rng(seed);
    auto pick = [&](const std::vector<Partition>& v) { return v[rng() % v.size()]; };
    for (int t = 0; t < 200; ++t) {
        Partition la = pick(all_partitions(4 + static_cast<int>(rng() % 3)));
        Partition ga = pick(all_partitions(2 + static_cast<int>(rng() % 3)));
        std::vector<Partition> strict = strict_partitions(4 + static_cast<int>(rng() % 3));
        Partition al = pick(strict);
        auto [lhs, rhs] = check_mainsym(la, ga, al);
        r.checked++;
        if (lhs != rhs)
            fail(r, "mainsym (random) fails at λ=" + to_text(la) + " γ=" + to_text(ga) +
                        " α=" + to_text(al));
    }
}

void suite_slopes(int bound, std::uint64_t, VerifyReport& r) {
    for (int n = 0; n <= bound; ++n) {
        for (const Partition& mu : all_partitions(n))
            for (int l = 0; l <= n + 2; ++l) {
                r.checked++;
                long long lhs = alad(mu, l) - rlad(mu, l - 2);
                long long rhs = (l == 0 ? 1 : 0) - lad(mu, l) + 2 * lad(mu, l - 1) - lad(mu, l - 2);
                if (lhs != rhs) fail(r, "ladaddrem fails at μ=" + to_text(mu) + " l=" + std::to_string(l));
            }
        for (const Partition& la : strict_partitions(n)) {
            Partition dr = dblreg(la);
            for (int l = 0; l <= n + 4; ++l) {
                r.checked++;
                if (slp(la, l) != lad(dr, l))
                    fail(r, "ladslope fails at λ=" + to_text(la) + " l=" + std::to_string(l));
                long long lhs = aslp(la, l) - rslp(la, l - 2);
                long long rhs = (l == 0 ? 1 : 0) - slp(la, l) + 2 * slp(la, l - 1) -
                                slp(la, l - 2) + zslp(la, l) - zslp(la, l - 2);
                if (lhs != rhs) fail(r, "slpaddrem fails at λ=" + to_text(la) + " l=" + std::to_string(l));
            }
        }
    }
}

void suite_carter(int bound, std::uint64_t, VerifyReport& r) {
    for (int n = 0; n <= bound; ++n)
        for (const Partition& la : all_partitions(n)) {
            r.checked++;
            if (is_two_carter(la) != is_two_carter_by_hooks(la))
                fail(r, "2-Carter definitions disagree at " + to_text(la));
        }
}

void suite_steinberg(int bound, std::uint64_t, VerifyReport& r) {
    // First inverse-matrix formula with a 2-core β, as a matrix identity.
    for (int asize = 0; asize <= 2; ++asize)
        for (const Partition& alpha : all_partitions(asize))
            for (const Partition& beta :
                 {Partition{}, Partition({1}), Partition({2, 1}), Partition({3, 2, 1})}) {
                int n = 2 * asize + beta.size();
                if (n > bound || !is_two_core_partition(beta)) continue;
                Partition label = sort_union(sort_union(alpha, alpha), beta);
                for (const Partition& mu : all_partitions(n)) {
                    long long lhs = d_check_inverse_entry(label, mu);
                    long long rhs = 0;
                    for (const Partition& xi : all_partitions(2 * asize)) {
                        int eps = eps_star(xi);
                        if (!eps) continue;
                        auto [x0, x1] = two_quotient(xi);
                        rhs += eps * lr_coeff(alpha, x0, x1) * lr_coeff(mu, beta, xi);
                    }
                    r.checked++;
                    if (lhs != rhs)
                        fail(r, "steincory fails at α=" + to_text(alpha) + " β=" + to_text(beta) +
                                    " μ=" + to_text(mu));
                }
            }
    // General reduction with a strict β.
    for (int asize = 0; asize <= 2; ++asize)
        for (const Partition& alpha : all_partitions(asize))
            for (int bsize = 0; bsize <= 3; ++bsize)
                for (const Partition& beta : strict_partitions(bsize)) {
                    int n = 2 * asize + bsize;
                    if (n > std::min(bound, 9)) continue;
                    Partition label = sort_union(sort_union(alpha, alpha), beta);
                    for (const Partition& mu : all_partitions(n)) {
                        long long lhs = d_check_inverse_entry(label, mu);
                        long long rhs = 0;
                        for (const Partition& laq : all_partitions(bsize)) {
                            long long db = d_check_inverse_entry(beta, laq);
                            if (!db) continue;
                            for (const Partition& xi : all_partitions(2 * asize)) {
                                int eps = eps_star(xi);
                                if (!eps) continue;
                                auto [x0, x1] = two_quotient(xi);
                                rhs += db * eps * lr_coeff(alpha, x0, x1) * lr_coeff(mu, laq, xi);
                            }
                        }
                        r.checked++;
                        if (lhs != rhs)
                            fail(r, "steinberggeneral fails at α=" + to_text(alpha) +
                                        " β=" + to_text(beta) + " μ=" + to_text(mu));
                    }
                }
}

void suite_dup(int bound, std::uint64_t, VerifyReport& r) {
    for (int n = 0; n <= bound; ++n)
        for (const Partition& alpha : all_partitions(n)) {
            Partition conj = conjugate(alpha);
            for (int c = 1; c <= alpha.at(1) + 1; ++c) {
                if (conj.at(c) <= conj.at(c + 1)) continue;
                auto [beta, gamma] = dup_move_sign(alpha, c);
                auto [g0, g1] = two_quotient(gamma);
                r.checked++;
                if (plus(g0, g1) != alpha || eps_star(gamma) != -1)
                    fail(r, "duplem fails at α=" + to_text(alpha) + " c=" + std::to_string(c));
            }
        }
}

void suite_empcore(int bound, std::uint64_t, VerifyReport& r) {
    for (int n = 0; n <= bound; n += 2)
        for (const Partition& ga : all_partitions(n)) {
            if (!two_core(ga).empty()) continue;
            auto [g0, g1] = two_quotient(ga);
            Partition sum = plus(g0, g1);
            Partition dbl = sort_union(sum, sum);
            bool all_even_cols = true;
            Partition conj = conjugate(ga);
            for (int c = 1; c <= ga.at(1); ++c)
                if (conj.at(c) % 2) all_even_cols = false;
            r.checked++;
            if (!dominates(ga, dbl) || ((ga == dbl) != all_even_cols))
                fail(r, "empcore fails at γ=" + to_text(ga));
        }
}

void suite_regdoub(int bound, std::uint64_t, VerifyReport& r) {
    for (int n = 0; n <= bound; ++n)
        for (const Partition& la : strict_partitions(n)) {
            r.checked++;
            if (two_core(dblreg(la)) != double_partition(four_bar_core(la)))
                fail(r, "regdoub fails at λ=" + to_text(la));
        }
}

void suite_pieri(int bound, std::uint64_t, VerifyReport& r) {
    for (int n = 0; n <= bound; ++n)
        for (const Partition& ga : all_partitions(n))
            for (int k = 0; k <= n; ++k)
                for (const Partition& al : all_partitions(n - k)) {
                    if (!contains(ga, al)) continue;
                    SkewShape s(ga, al);
                    std::vector<int> row{k}, col(k, 1);
                    r.checked++;
                    long long lr_row = lr_coeff(ga, al, k ? Partition(row) : Partition{});
                    long long lr_col = lr_coeff(ga, al, Partition(col));
                    if (lr_row != (is_horizontal_strip(s) ? 1 : 0) ||
                        lr_col != (is_vertical_strip(s) ? 1 : 0))
                        fail(r, "pieri fails at γ=" + to_text(ga) + " α=" + to_text(al));
                }
}

void suite_ctmackey(int bound, std::uint64_t, VerifyReport& r) {
    for (int tot = 0; tot <= std::min(bound, 7); ++tot)
        for (int nz = 0; nz <= tot; ++nz)
            for (const Partition& nu : all_partitions(nz))
                for (const Partition& ze : all_partitions(tot - nz))
                    for (int ln = 0; ln <= tot; ++ln)
                        for (const Partition& la : all_partitions(ln)) {
                            long long lhs = 0;
                            for (const Partition& mu : all_partitions(tot))
                                if (lrcb(mu, la)) lhs += lr_coeff(mu, nu, ze);
                            long long rhs = 0;
                            for (int en = 0; en <= ln; ++en)
                                for (const Partition& eta : all_partitions(en))
                                    for (const Partition& xi : all_partitions(ln - en)) {
                                        long long a = lr_coeff(la, eta, xi);
                                        if (a) rhs += a * lrcb(nu, xi) * lrcb(ze, eta);
                                    }
                            r.checked++;
                            if (lhs != rhs)
                                fail(r, "ctmackey fails at λ=" + to_text(la) + " ν=" + to_text(nu) +
                                            " ζ=" + to_text(ze));
                        }
}

void suite_signseq(int, std::uint64_t seed, VerifyReport& r) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 10000; ++t) {
        int len = 1 + static_cast<int>(rng() % 14);
        std::string s;
        for (int i = 0; i < len; ++i) s += (rng() % 2) ? '+' : '-';
        // Confluence: left-to-right stack reduction vs repeated scan removal.
        SignSeq fast = reduce_signs(SignSeq{s});
        std::string slow = s;
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i + 1 < slow.size(); ++i)
                if (slow[i] == '+' && slow[i + 1] == '-') {
                    slow.erase(i, 2);
                    changed = true;
                    break;
                }
        }
        r.checked++;
        if (fast.signs != slow) fail(r, "sign reduction disagrees on " + s);
        // Pairing bound: reduced minus-count ≤ m - t for any valid pairing.
        int m = 0;
        for (char ch : s) m += (ch == '-');
        std::vector<int> pluses, minuses;
        for (int i = 0; i < len; ++i) (s[i] == '+' ? pluses : minuses).push_back(i);
        // Maximal pairing via two pointers over the sorted index lists.
        int t_pairs = 0;
        size_t pi = 0;
        for (int b : minuses)
            if (pi < pluses.size() && pluses[pi] < b) {
                t_pairs++;
                pi++;
            }
        int reduced_minus = 0;
        for (char ch : fast.signs) reduced_minus += (ch == '-');
        r.checked++;
        if (reduced_minus > m - t_pairs)
            fail(r, "signseq bound fails on " + s);
    }
}

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> table = {
        {"drp", suite_drp},         {"mainsym", suite_mainsym},
        {"slopes", suite_slopes},   {"carter", suite_carter},
        {"steinberg", suite_steinberg}, {"dup", suite_dup},
        {"empcore", suite_empcore}, {"regdoub", suite_regdoub},
        {"pieri", suite_pieri},     {"ctmackey", suite_ctmackey},
        {"signseq", suite_signseq},
    };
    return table;
}

}  // namespace

VerifyReport run_verify_suite(const std::string& suite, int bound, std::uint64_t seed) {
    auto it = suites().find(suite);
    if (it == suites().end()) throw std::invalid_argument("unknown suite: " + suite);
    VerifyReport r;
    r.suite = suite;
    it->second(bound, seed, r);
    return r;
}

std::vector<std::string> verify_suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
}

}  // namespace barcomb
