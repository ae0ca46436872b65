#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barcomb/hooks.hpp"
#include "barcomb/regularise.hpp"

using namespace barcomb;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Literal reduction oracle with a pluggable priority for the three moves.
Partition four_bar_core_by_moves(const Partition& la, int strategy) {
    std::vector<int> parts = la.parts();
    for (;;) {
        bool changed = false;
        auto remove_even = [&] {
            for (size_t i = 0; i < parts.size(); ++i)
                if (parts[i] % 2 == 0) {
                    parts.erase(parts.begin() + i);
                    return true;
                }
            return false;
        };
        auto remove_pair = [&] {
            for (size_t i = 0; i < parts.size(); ++i)
                for (size_t j = i + 1; j < parts.size(); ++j)
                    if ((parts[i] + parts[j]) % 4 == 0) {
                        parts.erase(parts.begin() + j);
                        parts.erase(parts.begin() + i);
                        return true;
                    }
            return false;
        };
        auto lower_odd = [&] {
            for (size_t i = 0; i < parts.size(); ++i) {
                if (parts[i] % 2 == 0 || parts[i] < 5) continue;
                bool present = false;
                for (int p : parts) present |= (p == parts[i] - 4);
                if (!present) {
                    parts[i] -= 4;
                    return true;
                }
            }
            return false;
        };
        if (strategy == 0)
            changed = remove_even() || remove_pair() || lower_odd();
        else
            changed = lower_odd() || remove_pair() || remove_even();
        if (!changed) break;
    }
    return Partition::from_unsorted(parts);
}

}  // namespace

TEST_CASE("regularise") {
    CHECK(regularise(P({3, 3, 1, 1, 1})) == P({5, 3, 1}));
    CHECK(regularise(P({})) == P({}));
    CHECK(regularise(P({1, 1})) == P({2}));
    for (int n = 0; n <= 14; ++n)
        for (const Partition& la : all_partitions(n)) {
            Partition r = regularise(la);
            CHECK(r.is_strict());
            CHECK(content2(r) == content2(la));
            if (la.is_strict()) CHECK(r == la);
            for (int l = 0; l <= n + 2; ++l) CHECK(lad(r, l) == lad(la, l));
        }
}

TEST_CASE("double") {
    CHECK(double_partition(P({6, 2, 1})) == P({3, 3, 1, 1, 1}));
    CHECK(double_partition(P({1})) == P({1}));
    CHECK(double_partition(P({5, 1})) == P({3, 2, 1}));
    CHECK_THROWS_AS(double_partition(P({2, 2})), std::invalid_argument);
}

TEST_CASE("dblreg") {
    CHECK(dblreg(P({6, 2, 1})) == P({5, 3, 1}));
    CHECK(dblreg(P({4, 3, 2, 1})) == P({7, 3}));
    CHECK(dblreg(P({8, 4})) == P({5, 4, 2, 1}));
}

TEST_CASE("four bar core") {
    CHECK(four_bar_core(P({6, 2, 1})) == P({1}));
    CHECK(four_bar_core(P({5, 1})) == P({5, 1}));
    CHECK(four_bar_core(P({7, 5})) == P({}));
    CHECK(is_four_bar_core(P({})));
    CHECK(is_four_bar_core(P({3})));
    CHECK(is_four_bar_core(P({7, 3})));
    CHECK(is_four_bar_core(P({9, 5, 1})));
    CHECK(!is_four_bar_core(P({5})));
    CHECK(!is_four_bar_core(P({4, 2})));
    for (int n = 0; n <= 16; ++n)
        for (const Partition& la : strict_partitions(n)) {
            Partition fbc = four_bar_core(la);
            CHECK(is_four_bar_core(fbc));
            CHECK(fbc == four_bar_core_by_moves(la, 0));
            CHECK(fbc == four_bar_core_by_moves(la, 1));
        }
}

TEST_CASE("bar-core bijection") {
    CHECK(barcore_to_core(P({3})) == P({2, 1}));
    CHECK(barcore_to_core(P({7, 3})) == P({4, 3, 2, 1}));
    CHECK(barcore_to_core(P({})) == P({}));
    CHECK(core_to_barcore(P({3, 2, 1})) == P({5, 1}));
    CHECK_THROWS_AS(barcore_to_core(P({4})), std::invalid_argument);
    CHECK_THROWS_AS(core_to_barcore(P({3, 1})), std::invalid_argument);
    for (int c = 0; c <= 9; ++c) {
        std::vector<int> parts;
        for (int p = c; p >= 1; --p) parts.push_back(p);
        Partition core(parts);
        CHECK(barcore_to_core(core_to_barcore(core)) == core);
    }
    // and the other composition on 4-bar-cores up to (19,15,…)
    for (int l = 0; l <= 5; ++l)
        for (int i : {1, 3}) {
            std::vector<int> parts;
            for (int r = 0; r < l; ++r) parts.push_back(4 * (l - 1 - r) + i);
            Partition tau(parts);
            CHECK(core_to_barcore(barcore_to_core(tau)) == tau);
        }
}

TEST_CASE("regdoub lemma") {
    for (int n = 0; n <= 16; ++n)
        for (const Partition& la : strict_partitions(n))
            CHECK(two_core(dblreg(la)) == double_partition(four_bar_core(la)));
}

TEST_CASE("ladder counts") {
    CHECK(lad(P({2, 1}), 0) == 1);
    CHECK(lad(P({2, 1}), 1) == 2);
    CHECK(lad(P({2, 1}), 2) == 0);
    CHECK(alad(P({}), 0) == 1);
    CHECK(alad(P({}), 1) == 0);
    CHECK(lad(P({5, 3, 1}), 4) == 1);
    CHECK(lad(P({5, 3, 1}), -1) == 0);
    // addable/removable recursion
    for (int n = 0; n <= 14; ++n)
        for (const Partition& mu : all_partitions(n))
            for (int l = 0; l <= n + 2; ++l)
                CHECK(alad(mu, l) - rlad(mu, l - 2) ==
                      (l == 0 ? 1 : 0) - lad(mu, l) + 2 * lad(mu, l - 1) - lad(mu, l - 2));
}
