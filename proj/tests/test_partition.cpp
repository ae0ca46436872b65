#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barcomb/partition.hpp"

using namespace barcomb;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}

TEST_CASE("construction and canonical storage") {
    CHECK(P({4, 3, 1, 1}).length() == 4);
    CHECK(P({4, 3, 1, 1}).size() == 9);
    CHECK(P({}).empty());
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
    CHECK(Partition::from_unsorted({0, 3, 1, 3}) == P({3, 3, 1}));
    CHECK(P({3, 1}).at(1) == 3);
    CHECK(P({3, 1}).at(5) == 0);  // indexing past the length
    CHECK(P({3, 1}).is_strict());
    CHECK(!P({3, 3}).is_strict());
    CHECK(P({4, 3, 2}).even_parts() == 2);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(P({4, 3, 1, 1})) == P({4, 2, 2, 1}));
    CHECK(conjugate(P({})) == P({}));
    CHECK(conjugate(P({3})) == P({1, 1, 1}));
    for (int n = 0; n <= 20; ++n)
        for (const Partition& la : all_partitions(n)) CHECK(conjugate(conjugate(la)) == la);
}

TEST_CASE("dominance") {
    CHECK(dominates(P({3, 1}), P({2, 2})));
    CHECK(!dominates(P({2, 2}), P({3, 1})));
    CHECK(dominates(P({7}), P({7})));
    CHECK(!dominates(P({3}), P({2})));  // sizes differ
    // λ ⊵ μ iff μ' ⊵ λ'
    for (int n = 0; n <= 12; ++n) {
        auto parts = all_partitions(n);
        for (const Partition& la : parts)
            for (const Partition& mu : parts)
                CHECK(dominates(la, mu) == dominates(conjugate(mu), conjugate(la)));
    }
}

TEST_CASE("plus scale sort_union") {
    CHECK(plus(P({3, 1}), P({2, 2})) == P({5, 3}));
    CHECK(sort_union(P({3, 1}), P({2})) == P({3, 2, 1}));
    CHECK(scale(4, P({2, 1})) == P({8, 4}));
    // (λ⊔μ)' = λ' + μ'
    for (const Partition& la : all_partitions(5))
        for (const Partition& mu : all_partitions(4))
            CHECK(conjugate(sort_union(la, mu)) == plus(conjugate(la), conjugate(mu)));
}

TEST_CASE("cupcont and domsqcup") {
    std::vector<Partition> pool;
    for (int n = 0; n <= 8; ++n)
        for (const Partition& la : all_partitions(n)) pool.push_back(la);
    for (const Partition& la : pool)
        for (const Partition& mu : pool)
            for (const Partition& nu : pool) {
                CHECK(contains(sort_union(la, nu), sort_union(la, mu)) == contains(nu, mu));
                if (mu.size() == nu.size())
                    CHECK(dominates(sort_union(la, mu), sort_union(la, nu)) == dominates(mu, nu));
            }
}

TEST_CASE("arith_run") {
    CHECK(arith_run(15, 3) == P({15, 11, 7, 3}));
    CHECK(arith_run(3, 3) == P({3}));
    CHECK(arith_run(4, 0) == P({4}));
    CHECK(arith_run(0, 0) == P({}));
    CHECK_THROWS_AS(arith_run(17, 15), std::invalid_argument);
    CHECK_THROWS_AS(arith_run(3, 7), std::invalid_argument);
}

TEST_CASE("dominance covers") {
    CHECK(dominance_covers(P({2})) == std::set<Partition>{P({1, 1})});
    CHECK(dominance_covers(P({1, 1})).empty());
    CHECK(dominance_covers(P({3, 1})) == std::set<Partition>{P({2, 2}), P({2, 1, 1})});
    // Brute-force oracle: μ ⊲ λ with nothing strictly between.
    for (int n = 1; n <= 10; ++n) {
        auto parts = all_partitions(n);
        for (const Partition& la : parts) {
            std::set<Partition> expect;
            for (const Partition& mu : parts) {
                if (mu == la || !dominates(la, mu)) continue;
                boolbetween = false;
                for (const Partition& nu : parts)
                    if (nu != la && nu != mu && dominates(la, nu) && dominates(nu, mu)) {
                        between = true;
                        break;
                    }
                if (!between) expect.insert(mu);
            }
            CHECK(dominance_covers(la) == expect);
        }
    }
}

TEST_CASE("skew shape identifies equal diagrams") {
    SkewShape a(P({4, 2, 2}), P({3, 2, 1}));
    SkewShape b(P({4, 3, 2, 1}), P({3, 3, 1, 1}));
    CHECK(a == b);
    CHECK_THROWS_AS(SkewShape(P({2}), P({3})), std::invalid_argument);
}

TEST_CASE("text form") {
    CHECK(to_text(P({9, 4, 1})) == "9,4,1");
    CHECK(to_text(P({})) == "-");
    CHECK(parse_partition("9,4,1") == P({9, 4, 1}));
    CHECK(parse_partition("-") == P({}));
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
}
