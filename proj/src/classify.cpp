#include "barcomb/classify.hpp"

#include <algorithm>

#include "barcomb/hooks.hpp"
#include "barcomb/regularise.hpp"

namespace barcomb {

namespace {

int val2(int x) {
    int v = 0;
    while (x % 2 == 0) {
        x /= 2;
        ++v;
    }
    return v;
}

}  // namespace

bool is_two_carter(const Partition& la) {
    for (int r = 1; r <= la.length(); ++r) {
        int d = la.at(r) - la.at(r + 1) + 1;
        int gap = la.at(r + 1) - la.at(r + 2);
        if ((1 << val2(d)) <= gap) return false;
    }
    return true;
}

bool is_two_carter_by_hooks(const Partition& la) {
    Partition conj = conjugate(la);
    for (int c = 1; c <= la.at(1); ++c) {
        int col = conj.at(c);
        int v = -1;
        for (int r = 1; r <= col; ++r) {
            int h = la.at(r) + col - r - c + 1;
            if (v < 0)
                v = val2(h);
            else if (val2(h) != v)
                return false;
        }
    }
    return true;
}

namespace {

// Split the odd parts as τ + 4α (τ the 4-bar-core with as many parts); fails
// when the odd parts mix residues mod 4.
std::optional<std::pair<Partition, Partition>> odd_part_split(const std::vector<int>& odds) {
    if (odds.empty()) return std::make_pair(Partition{}, Partition{});
    int i = odds.back() % 4;
    int k = static_cast<int>(odds.size());
    std::vector<int> alpha;
    for (int r = 0; r < k; ++r) {
        if (odds[r] % 4 != i) return std::nullopt;
        int tau_r = 4 * (k - 1 - r) + i;
        if (odds[r] < tau_r) return std::nullopt;
        alpha.push_back((odds[r] - tau_r) / 4);
    }
    while (!alpha.empty() && alpha.back() == 0) alpha.pop_back();
    std::vector<int> tau;
    for (int r = 0; r < k; ++r) tau.push_back(4 * (k - 1 - r) + i);
    return std::make_pair(Partition(std::move(tau)), Partition(std::move(alpha)));
}

}  // namespace

std::optional<SeparatedDecomp> separated_decompose(const Partition& la) {
    if (!la.is_strict()) throw std::invalid_argument("separated_decompose requires strict input");
    std::vector<int> odds, halves;
    for (int p : la.parts()) (p % 2 ? odds : halves).push_back(p);
    for (int& h : halves) h /= 2;
    auto split = odd_part_split(odds);
    if (!split) return std::nullopt;
    auto [tau, alpha] = *split;
    Partition beta(std::move(halves));
    if (tau.at(1) < 4 * alpha.length() + 2 * beta.at(1) - 3) return std::nullopt;
    return SeparatedDecomp{tau, alpha, beta};
}

bool is_separated(const Partition& la) { return separated_decompose(la).has_value(); }

bool is_homogeneous_separated(const Partition& la) {
    auto d = separated_decompose(la);
    if (!d) throw std::domain_error("partition is not separated");
    return is_two_core_partition(d->beta) && is_two_carter(d->alpha);
}

const ExceptionalSets& exceptional_sets() {
    static const ExceptionalSets sets = [] {
        ExceptionalSets s;
        auto P = [](std::vector<int> v) { return Partition(std::move(v)); };
        s.scrR = {P({8, 4}),          P({8, 3, 2, 1}),      P({12, 3, 2, 1}),
                  P({13, 4, 3, 2, 1}), P({11, 5, 4, 3, 2}), P({15, 5, 4, 3, 2}),
                  P({19, 11, 5, 4, 3, 2})};
        s.special2 = {P({4, 3, 2, 1}), P({5, 4, 3, 2}), P({5, 4, 3, 2, 1}), P({7, 4, 3, 2, 1})};
        return s;
    }();
    return sets;
}

namespace {

// λ with its even parts required to be exactly `evens`; returns the (τ, α)
// split of the remaining odd parts when it exists.
std::optional<std::pair<Partition, Partition>> match_even_template(const Partition& la,
                                                                   std::vector<int> evens) {
    std::vector<int> odds, found_evens;
    for (int p : la.parts()) (p % 2 ? odds : found_evens).push_back(p);
    if (found_evens != evens) return std::nullopt;
    return odd_part_split(odds);
}

bool is_power_of_4_part(const Partition& la) {
    return la.length() == 1 && la.at(1) % 4 == 0;
}

}  // namespace

Classification classify_alt_spin(const Partition& la) {
    if (!la.is_strict()) throw std::invalid_argument("classification requires a strict partition");
    int ev = la.even_parts();
    if (ev >= 3) return {Verdict::reducible, "more-than-two-even-parts", std::nullopt};
    if (is_power_of_4_part(la)) return {Verdict::reducible, "single-part-multiple-of-4", std::nullopt};

    auto dec = [&]() -> std::optional<SeparatedDecomp> {
        return la.is_strict() ? separated_decompose(la) : std::nullopt;
    }();

    if (ev == 0) {
        if (auto split = match_even_template(la, {})) {
            auto [tau, alpha] = *split;
            if (is_two_carter(alpha) && tau.length() >= alpha.length())
                return {Verdict::irreducible, "mainthm01-odd", dec};
        }
        return {Verdict::reducible, "no-clause", dec};
    }
    if (ev == 1) {
        if (auto split = match_even_template(la, {2})) {
            auto [tau, alpha] = *split;
            bool cond = alpha.empty() || tau.at(alpha.length()) >= 3;
            if (is_two_carter(alpha) && cond)
                return {Verdict::irreducible, "mainthm01-2a", dec};
        }
        int b4 = la.at(1) + 2;
        if (b4 % 4 == 0 && b4 >= 8 &&
            (la == Partition({la.at(1)}) || la == Partition({la.at(1), 1})))
            return {Verdict::irreducible, "mainthm01-2b", dec};
        if (la == Partition({3, 2, 1})) return {Verdict::irreducible, "mainthm01-2c", dec};
        return {Verdict::reducible, "no-clause", dec};
    }
    // ev == 2
    if (exceptional_sets().special2.count(la))
        return {Verdict::irreducible, "mainthm-exceptional", dec};
    if (auto split = match_even_template(la, {4, 2})) {
        auto [tau, alpha] = *split;
        if (is_two_carter(alpha) && tau.length() > alpha.length())
            return {Verdict::irreducible, "mainthm-separated-form", dec};
    }
    return {Verdict::reducible, "no-clause", dec};
}

std::optional<int> ird_membership(const Partition& la) {
    if (!la.is_strict()) throw std::invalid_argument("ird_membership requires a strict partition");
    int ev = la.even_parts();
    if (ev > 2) return std::nullopt;
    // (4b) labels a homogeneous character even though the alternating-group
    // classifier rejects it.
    if (is_power_of_4_part(la)) return 1;
    Classification c = classify_alt_spin(la);
    if (c.verdict == Verdict::irreducible) return ev;
    return std::nullopt;
}

}  // namespace barcomb
