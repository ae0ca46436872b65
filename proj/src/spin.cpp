#include "barcomb/spin.hpp"

#include <algorithm>

#include "barcomb/regularise.hpp"

namespace barcomb {

int spin_residue(Node n) { return (n.col / 2) % 2; }

Content2 spin_content(const Partition& la) {
    Content2 ct;
    for (Node n : cells_of(la)) (spin_residue(n) == 0 ? ct.count0 : ct.count1)++;
    return ct;
}

int slope_of(Node n) { return 2 * n.row + n.col / 2 - 2; }

long long slp(const Partition& la, int l) {
    if (l < 0) return 0;
    long long c = 0;
    for (Node n : cells_of(la)) c += (slope_of(n) == l);
    return c;
}

long long zslp(const Partition& la, int l) {
    if (l < 0) return 0;
    long long c = 0;
    for (Node n : cells_of(la)) {
        if (slope_of(n) != l || n.col % 2 != 0 || n.row < 2) continue;
        if (la.at(n.row - 1) == n.col + 1 && la.at(n.row) == n.col &&
            la.at(n.row + 1) == n.col - 1)
            c++;
    }
    return c;
}

namespace {

// Longest run of columns of spin residue i immediately past column m.
int addable_run(int m, int i) {
    int t = 0;
    while (spin_residue({1, m + 1 + t}) == i) ++t;
    return t;
}

// Longest suffix of columns m, m-1, … of spin residue i.
int removable_run(int m, int i) {
    int t = 0;
    while (m - t >= 1 && spin_residue({1, m - t}) == i) ++t;
    return t;
}

}  // namespace

Partition lambda_down(const Partition& la, int i) {
    if (!la.is_strict()) throw std::invalid_argument("lambda_down requires a strict partition");
    std::vector<int> out(la.parts());
    int below = 0;  // value of the row beneath, after shrinking
    for (int r = la.length(); r >= 1; --r) {
        int lo = la.at(r) - removable_run(la.at(r), i);
        int v = std::max(lo, below == 0 ? 0 : below + 1);
        out[r - 1] = v;
        below = v;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    // middle zeros cannot occur: a zero forces every lower row to zero
    std::vector<int> parts;
    for (int v : out)
        if (v > 0) parts.push_back(v);
    return Partition(std::move(parts));
}

Partition lambda_up(const Partition& la, int i) {
    if (!la.is_strict()) throw std::invalid_argument("lambda_up requires a strict partition");
    std::vector<int> out;
    int above = -1;  // unrestricted for row 1
    for (int r = 1; r <= la.length() + 1; ++r) {
        int hi = la.at(r) + addable_run(la.at(r), i);
        int v = (above < 0) ? hi : std::min(hi, above - 1);
        v = std::max(v, la.at(r));
        if (r > la.length() && v <= 0) break;
        out.push_back(v);
        above = v;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return Partition(std::move(out));
}

std::set<Node> spin_removable(const Partition& la, int i) {
    Partition down = lambda_down(la, i);
    std::set<Node> out;
    for (int r = 1; r <= la.length(); ++r)
        for (int c = down.at(r) + 1; c <= la.at(r); ++c) out.insert({r, c});
    return out;
}

std::set<Node> spin_addable(const Partition& la, int i) {
    Partition up = lambda_up(la, i);
    std::set<Node> out;
    for (int r = 1; r <= up.length(); ++r)
        for (int c = la.at(r) + 1; c <= up.at(r); ++c) out.insert({r, c});
    return out;
}

long long aslp(const Partition& la, int l) {
    if (l < 0 || !la.is_strict()) return 0;
    long long c = 0;
    for (int i = 0; i <= 1; ++i)
        for (Node n : spin_addable(la, i)) c += (slope_of(n) == l);
    return c;
}

long long rslp(const Partition& la, int l) {
    if (l < 0 || !la.is_strict()) return 0;
    long long c = 0;
    for (int i = 0; i <= 1; ++i)
        for (Node n : spin_removable(la, i)) c += (slope_of(n) == l);
    return c;
}

SqrtTwoScalar spin_branch_coeff(const Partition& la, const Partition& mu, int i, int a) {
    if (!la.is_strict() || !mu.is_strict())
        throw std::invalid_argument("spin_branch_coeff requires strict partitions");
    if (la.size() != mu.size() + a) throw std::invalid_argument("size mismatch: need |λ| = |μ| + a");
    if (a == 0) return SqrtTwoScalar::integer(la == mu ? 1 : 0);
    if (!contains(la, mu)) return SqrtTwoScalar::integer(0);
    std::vector<Node> added;
    for (int r = 1; r <= la.length(); ++r)
        for (int c = mu.at(r) + 1; c <= la.at(r); ++c) {
            if (spin_residue({r, c}) != i) return SqrtTwoScalar::integer(0);
            added.push_back({r, c});
        }
    int pairs = 0;
    for (size_t x = 0; x < added.size(); ++x)
        for (size_t y = x + 1; y < added.size(); ++y)
            if (std::abs(added[x].col - added[y].col) == 1) pairs++;
    long k = a - la.length() + mu.length() - 2L * pairs;
    if (k < 0) throw std::logic_error("negative exponent in spin branching coefficient");
    return SqrtTwoScalar::pow2_half(k);
}

SignSeq reduce_signs(const SignSeq& s) {
    int plus = 0, minus = 0;
    for (char ch : s.signs) {
        if (ch == '+')
            plus++;
        else if (plus > 0)
            plus--;
        else
            minus++;
    }
    return SignSeq{std::string(minus, '-') + std::string(plus, '+')};
}

Signature i_signature(const Partition& mu, int i) {
    if (!mu.is_strict()) throw std::invalid_argument("i_signature requires a strict partition");
    Signature sig;
    struct Entry {
        Node node;
        bool add;
    };
    std::vector<Entry> entries;
    for (Node n : addable_nodes(mu))
        if (residue(n) == i) entries.push_back({n, true});
    for (Node n : removable_nodes(mu))
        if (residue(n) == i) entries.push_back({n, false});
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.node.row < b.node.row; });
    for (const Entry& e : entries) {
        sig.seq.signs += e.add ? '+' : '-';
        if (e.add) sig.addable.push_back(e.node);
        else sig.removable.push_back(e.node);
    }
    // Stack reduction keeps track of which nodes survive.
    std::vector<bool> survives(entries.size(), true);
    std::vector<size_t> open;
    for (size_t k = 0; k < entries.size(); ++k) {
        if (entries[k].add)
            open.push_back(k);
        else if (!open.empty()) {
            survives[open.back()] = false;
            survives[k] = false;
            open.pop_back();
        }
    }
    for (size_t k = 0; k < entries.size(); ++k) {
        if (!survives[k]) continue;
        if (entries[k].add)
            sig.conormal.insert(entries[k].node);
        else
            sig.normal.insert(entries[k].node);
    }
    return sig;
}

Partition e_max_label(const Partition& mu, int i) {
    Signature sig = i_signature(mu, i);
    std::vector<int> parts(mu.parts());
    for (Node n : sig.normal) parts[n.row - 1]--;
    return Partition::from_unsorted(std::move(parts));
}

Partition f_max_label(const Partition& mu, int i) {
    Signature sig = i_signature(mu, i);
    std::vector<int> parts(mu.parts());
    for (Node n : sig.conormal) {
        if (n.row - 1 >= static_cast<int>(parts.size())) parts.resize(n.row, 0);
        parts[n.row - 1]++;
    }
    return Partition::from_unsorted(std::move(parts));
}

bool noregdown(const Partition& la, int i) {
    long long eps_spin = static_cast<long long>(spin_removable(la, i).size());
    Signature sig = i_signature(dblreg(la), i);
    return static_cast<long long>(sig.normal.size()) < eps_spin;
}

bool noregdown_sufficient(const Partition& la, int i) {
    auto rem = spin_removable(la, i);
    auto add = spin_addable(la, i);
    if (rem.empty() || add.empty()) return false;
    int max_add = 0, min_rem = 1 << 30;
    for (Node n : add) max_add = std::max(max_add, slope_of(n));
    for (Node n : rem) min_rem = std::min(min_rem, slope_of(n));
    return max_add > min_rem;
}

}  // namespace barcomb
