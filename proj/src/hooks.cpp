#include "barcomb/hooks.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace barcomb {

int residue(Node n) { return ((n.col - n.row) % 2 + 2) % 2; }

Content2 content2(const Partition& la) {
    Content2 ct;
    for (Node n : cells_of(la)) (residue(n) == 0 ? ct.count0 : ct.count1)++;
    return ct;
}

AbacusDisplay AbacusDisplay::of(const Partition& la) {
    int n = la.length() + 2;
    if (n % 2 != 0) ++n;
    AbacusDisplay d;
    for (int r = 1; r <= n; ++r) d.positions_.push_back(la.at(r) - r);
    return d;
}

bool AbacusDisplay::occupied(long long pos) const {
    if (pos < -bead_count()) return true;  // conceptual tail of beads
    return std::find(positions_.begin(), positions_.end(), pos) != positions_.end();
}

Partition AbacusDisplay::to_partition() const {
    std::vector<long long> ps = positions_;
    std::sort(ps.begin(), ps.end(), std::greater<long long>());
    std::vector<int> parts;
    for (size_t r = 0; r < ps.size(); ++r) {
        long long part = ps[r] + static_cast<long long>(r) + 1;
        if (part > 0) parts.push_back(static_cast<int>(part));
    }
    return Partition(std::move(parts));
}

std::string AbacusDisplay::render() const {
    long long lo = -bead_count();
    long long hi = *std::max_element(positions_.begin(), positions_.end());
    if (hi % 2 == 0) ++hi;  // finish on a full (even, odd) row
    std::ostringstream os;
    for (long long p = lo; p < hi; p += 2) {
        os << (occupied(p) ? 'b' : '.') << (occupied(p + 1) ? 'b' : '.');
        if (p + 2 < hi) os << '\n';
    }
    return os.str();
}

namespace {

// Beads of one runner in runner-local coordinates (position = 2k + parity,
// k ≥ -N/2 occupied conceptually below the window).
struct Runner {
    std::vector<long long> beads;  // descending local indices
    long long floor_k;             // local indices < floor_k are occupied
};

std::array<Runner, 2> split_runners(const AbacusDisplay& d) {
    std::array<Runner, 2> rs;
    long long n = d.bead_count();
    rs[0].floor_k = -(n / 2);
    rs[1].floor_k = -(n / 2);
    for (long long p : d.positions()) {
        int par = static_cast<int>(((p % 2) + 2) % 2);
        long long k = (p - par) / 2;
        rs[par].beads.push_back(k);
    }
    for (auto& r : rs) std::sort(r.beads.begin(), r.beads.end(), std::greater<long long>());
    return rs;
}

Partition runner_partition(const Runner& r) {
    std::vector<int> parts;
    for (size_t i = 0; i < r.beads.size(); ++i) {
        // Empty local slots above this bead.
        long long below = static_cast<long long>(r.beads.size() - 1 - i);  // beads above it
        long long slots = r.beads[i] - r.floor_k;                          // window slots above
        long long empties = slots - below;
        if (empties > 0) parts.push_back(static_cast<int>(empties));
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

}  // namespace

Partition two_core(const Partition& la) {
    AbacusDisplay d = AbacusDisplay::of(la);
    auto rs = split_runners(d);
    std::vector<long long> packed;
    for (int par = 0; par <= 1; ++par) {
        long long m = static_cast<long long>(rs[par].beads.size());
        for (long long j = 0; j < m; ++j) packed.push_back(2 * (rs[par].floor_k + j) + par);
    }
    std::sort(packed.begin(), packed.end(), std::greater<long long>());
    AbacusDisplay core;
    // reuse partition reconstruction
    std::vector<int> parts;
    for (size_t r = 0; r < packed.size(); ++r) {
        long long part = packed[r] + static_cast<long long>(r) + 1;
        if (part > 0) parts.push_back(static_cast<int>(part));
    }
    return Partition(std::move(parts));
}

int two_weight(const Partition& la) {
    AbacusDisplay d = AbacusDisplay::of(la);
    auto rs = split_runners(d);
    long long w = 0;
    for (int par = 0; par <= 1; ++par) {
        const Runner& r = rs[par];
        long long m = static_cast<long long>(r.beads.size());
        // r.beads descending; packed positions descending are floor_k+m-1, ...
        for (long long i = 0; i < m; ++i) {
            long long target = r.floor_k + (m - 1 - i);
            w += r.beads[i] - target;
        }
    }
    return static_cast<int>(w);
}

std::pair<Partition, Partition> two_quotient(const Partition& la) {
    AbacusDisplay d = AbacusDisplay::of(la);
    auto rs = split_runners(d);
    return {runner_partition(rs[1]), runner_partition(rs[0])};
}

Partition from_core_and_quotient(const Partition& core, const Partition& q0, const Partition& q1) {
    if (two_core(core) != core) throw std::invalid_argument("first argument must be a 2-core");
    // Build a display for the core large enough to hold the moved beads.
    int need = core.length() + 2 * (q0.size() + q1.size()) + 2;
    int n = need + (need % 2);
    std::vector<long long> pos;
    for (int r = 1; r <= n; ++r) pos.push_back(core.at(r) - r);
    std::array<std::vector<long long>, 2> runners;
    for (long long p : pos) {
        int par = static_cast<int>(((p % 2) + 2) % 2);
        runners[par].push_back((p - par) / 2);
    }
    for (auto& v : runners) std::sort(v.begin(), v.end(), std::greater<long long>());
    auto apply = [&](std::vector<long long>& beads, const Partition& q) {
        for (int i = 0; i < q.length(); ++i) beads[i] += q.at(i + 1);
    };
    apply(runners[1], q0);
    apply(runners[0], q1);
    std::vector<long long> all;
    for (int par = 0; par <= 1; ++par)
        for (long long k : runners[par]) all.push_back(2 * k + par);
    std::sort(all.begin(), all.end(), std::greater<long long>());
    std::vector<int> parts;
    for (size_t r = 0; r < all.size(); ++r) {
        long long part = all[r] + static_cast<long long>(r) + 1;
        if (part > 0) parts.push_back(static_cast<int>(part));
    }
    return Partition(std::move(parts));
}

int eps_star(const Partition& la) {
    if (!two_core(la).empty()) return 0;
    // Slide beads up one slot at a time; a slide over an empty intermediate
    // position removes a horizontal domino.
    AbacusDisplay d = AbacusDisplay::of(la);
    std::vector<long long> pos = d.positions();
    std::sort(pos.begin(), pos.end());
    long long floor = -d.bead_count();
    auto occupied = [&](long long p) {
        if (p < floor) return true;
        return std::find(pos.begin(), pos.end(), p) != pos.end();
    };
    int horizontal = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (long long& p : pos) {
            if (!occupied(p - 2)) {
                if (!occupied(p - 1)) horizontal++;
                p -= 2;
                moved = true;
            }
        }
    }
    return horizontal % 2 == 0 ? 1 : -1;
}

int hook_length(const Partition& la, Node n) {
    if (n.row < 1 || n.col < 1 || la.at(n.row) < n.col)
        throw std::invalid_argument("node outside the diagram");
    return la.at(n.row) + conjugate(la).at(n.col) - n.row - n.col + 1;
}

std::pair<Partition, Partition> dup_move_sign(const Partition& alpha, int c) {
    if (c < 1) throw std::invalid_argument("column index must be positive");
    Partition conj = conjugate(alpha);
    if (conj.at(c) <= conj.at(c + 1))
        throw std::invalid_argument("dup_move_sign requires α'_c > α'_{c+1}");
    Partition beta = sort_union(alpha, alpha);
    Partition bconj = conjugate(beta);
    // Remove the bottom node of column c, add below column c+1.
    std::vector<int> p = beta.parts();
    p[bconj.at(c) - 1]--;
    p[bconj.at(c + 1)]++;
    Partition gamma = Partition::from_unsorted(std::move(p));
    return {beta, gamma};
}

bool is_two_core_partition(const Partition& la) { return two_core(la) == la; }

}  // namespace barcomb
