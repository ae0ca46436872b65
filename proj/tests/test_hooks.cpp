#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "barcomb/hooks.hpp"

using namespace barcomb;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Literal domino removal, used as the order-independence oracle for ε*.
// strategy 0 removes the topmost removable domino first, 1 the leftmost.
int eps_star_by_removal(const Partition& la, int strategy) {
    Partition cur = la;
    int horizontal = 0;
    for (;;) {
        std::vector<std::pair<Node, bool>> dominoes;  // (upper-left cell, is_horizontal)
        for (int r = 1; r <= cur.length(); ++r) {
            int c = cur.at(r);
            if (c >= 2 && cur.at(r + 1) <= c - 2) dominoes.push_back({{r, c - 1}, true});
            if (cur.at(r + 1) == c && cur.at(r + 2) < c && c > 0 &&
                (r + 1 <= cur.length()))
                dominoes.push_back({{r, c}, false});
        }
        if (dominoes.empty()) break;
        auto pick = dominoes.front();
        if (strategy == 1)
            for (const auto& d : dominoes)
                if (d.first.col < pick.first.col ||
                    (d.first.col == pick.first.col && d.first.row < pick.first.row))
                    pick = d;
        std::vector<int> parts = cur.parts();
        if (pick.second) {
            parts[pick.first.row - 1] -= 2;
        } else {
            parts[pick.first.row - 1] -= 1;
            parts[pick.first.row] -= 1;
        }
        horizontal += pick.second ? 1 : 0;
        cur = Partition::from_unsorted(std::move(parts));
    }
    if (!cur.empty()) return 0;
    return horizontal % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("residue and content") {
    CHECK(residue({1, 1}) == 0);
    CHECK(residue({1, 2}) == 1);
    CHECK(residue({3, 1}) == 0);
    CHECK(content2(P({5, 2, 1})) == Content2{5, 3});
    CHECK(content2(P({})) == Content2{0, 0});
    CHECK(content2(P({2, 1})) == Content2{1, 2});
}

TEST_CASE("two core, weight and quotient") {
    CHECK(two_core(P({5, 3, 1, 1, 1})) == P({1}));
    CHECK(two_weight(P({5, 3, 1, 1, 1})) == 5);
    CHECK(two_core(P({3, 2, 1})) == P({3, 2, 1}));
    CHECK(two_weight(P({3, 2, 1})) == 0);
    CHECK(two_core(P({2, 2})) == P({}));
    CHECK(two_weight(P({2, 2})) == 2);

    auto [q0, q1] = two_quotient(P({5, 3, 1, 1, 1}));
    CHECK(q0 == P({2, 1}));
    CHECK(q1 == P({2}));
    CHECK(two_quotient(P({})) == std::pair{P({}), P({})});
    auto q22 = two_quotient(P({2, 2}));
    CHECK(q22.first.size() + q22.second.size() == 2);
}

TEST_CASE("size bookkeeping and reconstruction") {
    for (int n = 0; n <= 14; ++n)
        for (const Partition& la : all_partitions(n)) {
            auto [q0, q1] = two_quotient(la);
            CHECK(la.size() == two_core(la).size() + 2 * (q0.size() + q1.size()));
            CHECK(two_weight(la) == q0.size() + q1.size());
            CHECK(from_core_and_quotient(two_core(la), q0, q1) == la);
        }
    // Injectivity on each grade by counting distinct triples.
    for (int n = 0; n <= 12; ++n) {
        std::set<std::tuple<Partition, Partition, Partition>> seen;
        auto parts = all_partitions(n);
        for (const Partition& la : parts) {
            auto [q0, q1] = two_quotient(la);
            seen.insert({two_core(la), q0, q1});
        }
        CHECK(seen.size() == parts.size());
    }
}

TEST_CASE("content determines the core") {
    for (int n = 0; n <= 12; ++n) {
        auto parts = all_partitions(n);
        for (const Partition& la : parts)
            for (const Partition& mu : parts)
                CHECK((two_core(la) == two_core(mu)) == (content2(la) == content2(mu)));
    }
}

TEST_CASE("eps star") {
    CHECK(eps_star(P({2})) == -1);
    CHECK(eps_star(P({1, 1})) == 1);
    CHECK(eps_star(P({2, 1})) == 0);
    for (int n = 0; n <= 12; ++n)
        for (const Partition& la : all_partitions(n)) {
            int abacus = eps_star(la);
            CHECK(abacus == eps_star_by_removal(la, 0));
            CHECK(abacus == eps_star_by_removal(la, 1));
        }
}

TEST_CASE("hook lengths") {
    CHECK(hook_length(P({2, 1}), {1, 1}) == 3);
    CHECK(hook_length(P({2, 1}), {1, 2}) == 1);
    CHECK(hook_length(P({7}), {1, 7}) == 1);
    CHECK_THROWS_AS(hook_length(P({2, 1}), {2, 2}), std::invalid_argument);
}

TEST_CASE("dup move sign") {
    auto [b1, g1] = dup_move_sign(P({1}), 1);
    CHECK(b1 == P({1, 1}));
    CHECK(g1 == P({2}));
    auto [b2, g2] = dup_move_sign(P({2, 1}), 2);
    CHECK(b2 == P({2, 2, 1, 1}));
    CHECK(g2 == P({3, 1, 1, 1}));
    auto [b3, g3] = dup_move_sign(P({1, 1}), 1);
    CHECK(b3 == P({1, 1, 1, 1}));
    CHECK(g3 == P({2, 1, 1}));
    CHECK_THROWS_AS(dup_move_sign(P({1, 1}), 2), std::invalid_argument);
    // Lemma: α = γ⁰ + γ¹ and ε*(γ) = -1 for every valid column.
    for (int n = 0; n <= 6; ++n)
        for (const Partition& alpha : all_partitions(n)) {
            Partition conj = conjugate(alpha);
            for (int c = 1; c <= alpha.at(1) + 1; ++c) {
                if (conj.at(c) <= conj.at(c + 1)) continue;
                auto [beta, gamma] = dup_move_sign(alpha, c);
                CHECK(beta == sort_union(alpha, alpha));
                auto [g0, g1] = two_quotient(gamma);
                CHECK(plus(g0, g1) == alpha);
                CHECK(eps_star(gamma) == -1);
            }
        }
}

TEST_CASE("empty-core dominance lemma") {
    for (int n = 0; n <= 12; n += 2)
        for (const Partition& ga : all_partitions(n)) {
            if (!two_core(ga).empty()) continue;
            auto [g0, g1] = two_quotient(ga);
            Partition sum = plus(g0, g1);
            Partition dbl = sort_union(sum, sum);
            CHECK(dominates(ga, dbl));
            Partition conj = conjugate(ga);
            bool even_cols = true;
            for (int c = 1; c <= ga.at(1); ++c)
                if (conj.at(c) % 2) even_cols = false;
            CHECK((ga == dbl) == even_cols);
        }
}

TEST_CASE("abacus rendering") {
    CHECK(AbacusDisplay::of(P({5, 3, 1, 1, 1})).render() ==
          "bb\n"
          "b.\n"
          "bb\n"
          "b.\n"
          ".b\n"
          "..\n"
          "b.");
    CHECK(AbacusDisplay::of(P({5, 3, 1, 1, 1})).to_partition() == P({5, 3, 1, 1, 1}));
}
