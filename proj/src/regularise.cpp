#include "barcomb/regularise.hpp"

#include <algorithm>
#include <map>

#include "barcomb/hooks.hpp"

namespace barcomb {

Partition regularise(const Partition& la) {
    if (la.empty()) return la;
    std::map<int, int> count;
    for (Node n : cells_of(la)) count[ladder_of(n)]++;
    // Row r receives one node from each ladder l ≥ r-1 holding at least r nodes.
    std::vector<int> rows;
    for (int r = 1;; ++r) {
        int len = 0;
        for (const auto& [l, c] : count)
            if (l >= r - 1 && c >= r) len++;
        if (len == 0) break;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

Partition double_partition(const Partition& strict) {
    if (!strict.is_strict()) throw std::invalid_argument("double requires a strict partition");
    std::vector<int> parts;
    for (int p : strict.parts()) {
        parts.push_back((p + 1) / 2);
        if (p / 2 > 0) parts.push_back(p / 2);
    }
    return Partition(std::move(parts));  // ceil-first interleaving is already sorted
}

Partition dblreg(const Partition& strict) { return regularise(double_partition(strict)); }

bool is_four_bar_core(const Partition& la) {
    if (la.empty()) return true;
    int i = la.parts().back() <= 2 ? la.parts().back() : la.parts().back() % 4;
    if (i != 1 && i != 3) return false;
    for (int r = 1; r <= la.length(); ++r)
        if (la.at(r) != 4 * (la.length() - r) + i) return false;
    return true;
}

Partition four_bar_core(const Partition& strict) {
    if (!strict.is_strict()) throw std::invalid_argument("four_bar_core requires a strict partition");
    std::vector<int> parts;
    for (int p : strict.parts())
        if (p % 2 == 1) parts.push_back(p);  // even parts removed outright
    // Pairs of odd parts with sum ≡ 0 (mod 4) are residues {1,3}; keep the
    // majority residue class only.
    std::vector<int> res1, res3;
    for (int p : parts) (p % 4 == 1 ? res1 : res3).push_back(p);
    while (!res1.empty() && !res3.empty()) {
        res1.pop_back();
        res3.pop_back();
    }
    std::vector<int>& keep = res1.empty() ? res3 : res1;
    // Lower parts by 4 where possible: k surviving parts of residue i pack
    // down to the 4-bar-core with k parts.
    int k = static_cast<int>(keep.size());
    if (k == 0) return Partition{};
    int i = keep[0] % 4;
    std::vector<int> out;
    for (int r = 0; r < k; ++r) out.push_back(4 * (k - 1 - r) + i);
    return Partition(std::move(out));
}

Partition barcore_to_core(const Partition& tau) {
    if (!is_four_bar_core(tau)) throw std::invalid_argument("not a 4-bar-core");
    return double_partition(tau);
}

Partition core_to_barcore(const Partition& sigma) {
    if (!is_two_core_partition(sigma)) throw std::invalid_argument("not a 2-core");
    int l = sigma.length();
    std::vector<int> parts;
    for (int r = 1; 2 * l - 4 * r + 3 > 0; ++r) parts.push_back(2 * l - 4 * r + 3);
    return Partition(std::move(parts));
}

long long lad(const Partition& mu, int l) {
    if (l < 0) return 0;
    long long c = 0;
    for (Node n : cells_of(mu)) c += (ladder_of(n) == l);
    return c;
}

long long alad(const Partition& mu, int l) {
    if (l < 0) return 0;
    long long c = 0;
    for (Node n : addable_nodes(mu)) c += (ladder_of(n) == l);
    return c;
}

long long rlad(const Partition& mu, int l) {
    if (l < 0) return 0;
    long long c = 0;
    for (Node n : removable_nodes(mu)) c += (ladder_of(n) == l);
    return c;
}

}  // namespace barcomb
