#include "barcomb/tableaux.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace barcomb {

std::string Tableau::render() const {
    std::ostringstream os;
    for (int r = 1; r <= shape.outer().length(); ++r) {
        for (int c = 1; c <= shape.outer().at(r); ++c) {
            if (c <= shape.inner().at(r))
                os << " .";
            else
                os << ' ' << entries.at({r, c});
        }
        if (r < shape.outer().length()) os << '\n';
    }
    return os.str();
}

namespace {

// DFS over semistandard fillings of a skew shape with bounded entry counts.
// `lattice` additionally enforces the lattice-word condition on the reading
// word (right to left along rows, top to bottom).
struct Filler {
    const Partition& outer;
    const Partition& inner;
    std::vector<int> remaining;  // per entry value, 1-based
    bool lattice;
    std::vector<int> prefix_counts;  // counts seen so far in reading order
    std::vector<std::vector<int>> grid;
    long long count = 0;
    bool want_witness = false;
    std::optional<std::vector<std::vector<int>>> witness;

    Filler(const Partition& o, const Partition& i, std::vector<int> type, bool lat)
        : outer(o), inner(i), remaining(std::move(type)), lattice(lat) {
        grid.assign(outer.length() + 1, {});
        for (int r = 1; r <= outer.length(); ++r) grid[r].assign(outer.at(r) + 1, 0);
        prefix_counts.assign(remaining.size() + 2, 0);
    }

    // Cells in reading order: rows top to bottom, right to left.
    void cells_in_reading_order(std::vector<Node>& out) const {
        for (int r = 1; r <= outer.length(); ++r)
            for (int c = outer.at(r); c >= inner.at(r) + 1; --c) out.push_back({r, c});
    }

    void run() {
        std::vector<Node> order;
        cells_in_reading_order(order);
        dfs(order, 0);
    }

    void dfs(const std::vector<Node>& order, size_t idx) {
        if (want_witness && witness) return;
        if (idx == order.size()) {
            count++;
            if (want_witness && !witness) witness = grid;
            return;
        }
        Node n = order[idx];
        for (int v = 1; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            // row: weakly increasing, the right neighbour is filled earlier
            if (n.col < outer.at(n.row) && v > value_at(n.row, n.col + 1)) continue;
            // column: strictly increasing below a filled cell of the skew shape
            if (n.row > 1 && n.col > inner.at(n.row - 1) && v <= value_at(n.row - 1, n.col))
                continue;
            // lattice word: every prefix has at least as many (v-1)s as vs
            if (lattice && v > 1 && prefix_counts[v - 1] <= prefix_counts[v]) continue;
            set(n, v);
            dfs(order, idx + 1);
            unset(n, v);
        }
    }

    int value_at(int r, int c) const {
        if (r < 1 || r > outer.length()) return 0;
        if (c < 1 || c > outer.at(r)) return 0;
        return grid[r][c - 1 + 0];
    }

    void set(Node n, int v) {
        grid[n.row][n.col - 1] = v;
        remaining[v - 1]--;
        prefix_counts[v]++;
    }
    void unset(Node n, int v) {
        grid[n.row][n.col - 1] = 0;
        remaining[v - 1]++;
        prefix_counts[v]--;
    }
};

struct LrKey {
    Partition g, a, b;
    auto operator<=>(const LrKey&) const = default;
};

std::map<LrKey, long long> lr_memo;
std::shared_mutex lr_memo_mutex;

}  // namespace

long long kostka(const Partition& la, const std::vector<int>& mu) {
    long long total = 0;
    for (int m : mu) {
        if (m < 0) throw std::invalid_argument("type entries must be non-negative");
        total += m;
    }
    if (total != la.size()) return 0;
    if (la.empty()) return 1;
    Filler f(la, Partition{}, mu, false);
    f.run();
    return f.count;
}

long long lr_coeff(const Partition& gamma, const Partition& alpha, const Partition& beta) {
    if (gamma.size() != alpha.size() + beta.size()) return 0;
    if (!contains(gamma, alpha)) return 0;
    {
        std::shared_lock lock(lr_memo_mutex);
        auto it = lr_memo.find({gamma, alpha, beta});
        if (it != lr_memo.end()) return it->second;
    }
    Filler f(gamma, alpha, beta.parts(), true);
    f.run();
    std::unique_lock lock(lr_memo_mutex);
    lr_memo[{gamma, alpha, beta}] = f.count;
    return f.count;
}

long long lr_coeff_multi(const Partition& zeta, const Partition& alpha, const Partition& beta,
                         const Partition& gamma) {
    if (zeta.size() != alpha.size() + beta.size() + gamma.size()) return 0;
    long long total = 0;
    for (const Partition& mu : all_partitions(beta.size() + gamma.size())) {
        long long inner = lr_coeff(mu, beta, gamma);
        if (inner) total += lr_coeff(zeta, alpha, mu) * inner;
    }
    return total;
}

int lrcb(const Partition& gamma, const Partition& alpha) {
    if (!contains(gamma, alpha)) return 0;
    return is_vertical_strip(SkewShape(gamma, alpha)) ? 1 : 0;
}

long long lrcb_multi(const Partition& zeta, const Partition& alpha, const Partition& beta) {
    int a = zeta.size() - alpha.size() - beta.size();
    if (a < 0) return 0;
    std::vector<int> col(a, 1);
    return lr_coeff_multi(zeta, alpha, beta, Partition(std::move(col)));
}

bool is_horizontal_strip(const SkewShape& s) {
    for (int r = 2; r <= s.outer().length(); ++r)
        if (s.outer().at(r) > s.inner().at(r - 1)) return false;
    return true;
}

bool is_vertical_strip(const SkewShape& s) {
    for (int r = 1; r <= s.outer().length(); ++r)
        if (s.outer().at(r) - s.inner().at(r) > 1) return false;
    return true;
}

std::optional<Tableau> lr_witness(const Partition& gamma, const Partition& alpha,
                                  const Partition& beta) {
    if (gamma.size() != alpha.size() + beta.size() || !contains(gamma, alpha)) return std::nullopt;
    Filler f(gamma, alpha, beta.parts(), true);
    f.want_witness = true;
    f.run();
    if (!f.witness) return std::nullopt;
    Tableau t{SkewShape(gamma, alpha), {}};
    for (int r = 1; r <= gamma.length(); ++r)
        for (int c = alpha.at(r) + 1; c <= gamma.at(r); ++c)
            t.entries[{r, c}] = (*f.witness)[r][c - 1];
    return t;
}

std::map<Partition, long long> lr_expand(const Partition& alpha, const Partition& beta) {
    std::map<Partition, long long> out;
    for (const Partition& gamma : all_partitions(alpha.size() + beta.size())) {
        if (!dominates(plus(alpha, beta), gamma) || !dominates(gamma, sort_union(alpha, beta)))
            continue;
        long long c = lr_coeff(gamma, alpha, beta);
        if (c) out[gamma] = c;
    }
    return out;
}

}  // namespace barcomb
