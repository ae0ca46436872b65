#include "barcomb/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace barcomb {

void Partition::validate() const {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_strict() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] == parts_[i]) return false;
    return true;
}

int Partition::even_parts() const {
    int ev = 0;
    for (int p : parts_) ev += (p % 2 == 0);
    return ev;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(outer_, inner_)) throw std::invalid_argument("skew shape requires inner ⊆ outer");
}

std::vector<Node> SkewShape::cells() const {
    std::vector<Node> out;
    for (int r = 1; r <= outer_.length(); ++r)
        for (int c = inner_.at(r) + 1; c <= outer_.at(r); ++c) out.push_back({r, c});
    return out;
}

Partition conjugate(const Partition& la) {
    std::vector<int> cols;
    if (!la.empty()) {
        cols.resize(la.at(1));
        for (int r = 1; r <= la.length(); ++r)
            for (int c = 0; c < la.at(r); ++c) cols[c]++;
    }
    return Partition(std::move(cols));
}

bool dominates(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size()) return false;
    int a = 0, b = 0;
    int len = std::max(la.length(), mu.length());
    for (int r = 1; r <= len; ++r) {
        a += la.at(r);
        b += mu.at(r);
        if (a < b) return false;
    }
    return true;
}

bool contains(const Partition& la, const Partition& mu) {
    for (int r = 1; r <= mu.length(); ++r)
        if (mu.at(r) > la.at(r)) return false;
    return true;
}

Partition plus(const Partition& la, const Partition& mu) {
    std::vector<int> out;
    int len = std::max(la.length(), mu.length());
    for (int r = 1; r <= len; ++r) out.push_back(la.at(r) + mu.at(r));
    return Partition(std::move(out));
}

Partition scale(int m, const Partition& la) {
    if (m <= 0) throw std::invalid_argument("scale factor must be positive");
    std::vector<int> out = la.parts();
    for (int& p : out) p *= m;
    return Partition(std::move(out));
}

Partition sort_union(const Partition& la, const Partition& mu) {
    std::vector<int> out = la.parts();
    out.insert(out.end(), mu.parts().begin(), mu.parts().end());
    return Partition::from_unsorted(std::move(out));
}

Partition arith_run(int a, int b) {
    if (a < b || b < 0) throw std::invalid_argument("arith_run requires a >= b >= 0");
    if ((a - b) % 4 != 0) throw std::invalid_argument("arith_run requires a ≡ b (mod 4)");
    std::vector<int> out;
    for (int v = a; v >= b; v -= 4)
        if (v > 0) out.push_back(v);
    return Partition(std::move(out));
}

std::vector<Node> cells_of(const Partition& la) {
    std::vector<Node> out;
    for (int r = 1; r <= la.length(); ++r)
        for (int c = 1; c <= la.at(r); ++c) out.push_back({r, c});
    return out;
}

std::vector<Node> addable_nodes(const Partition& la) {
    std::vector<Node> out;
    for (int r = 1; r <= la.length() + 1; ++r)
        if (la.at(r) < la.at(r - 1) || r == 1) out.push_back({r, la.at(r) + 1});
    return out;
}

std::vector<Node> removable_nodes(const Partition& la) {
    std::vector<Node> out;
    for (int r = 1; r <= la.length(); ++r)
        if (la.at(r) > la.at(r + 1)) out.push_back({r, la.at(r)});
    return out;
}

namespace {

// Single-node moves of the cover lemma: to the row below or the column to the
// left.  The maximality filter guards the degenerate placements.
std::set<Partition> cover_candidates(const Partition& la) {
    std::set<Partition> out;
    auto try_move = [&](Node from, Node to) {
        std::vector<int> p(la.parts());
        p[from.row - 1]--;
        if (to.row > static_cast<int>(p.size())) p.resize(to.row, 0);
        p[to.row - 1]++;
        while (!p.empty() && p.back() == 0) p.pop_back();
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] < p[i + 1]) return;
        if (p.empty() && la.size() > 0) return;
        Partition mu{std::move(p)};
        if (dominates(la, mu) && mu != la) out.insert(mu);
    };
    Partition conj = conjugate(la);
    for (Node n : removable_nodes(la)) {
        try_move(n, {n.row + 1, la.at(n.row + 1) + 1});                   // row below
        if (n.col >= 2) try_move(n, {conj.at(n.col - 1) + 1, n.col - 1});  // column left
    }
    return out;
}

}  // namespace

std::set<Partition> dominance_covers(const Partition& la) {
    std::set<Partition> cand = cover_candidates(la);
    // Keep the maximal candidates only.
    std::set<Partition> out;
    for (const Partition& mu : cand) {
        bool maximal = true;
        for (const Partition& nu : cand)
            if (nu != mu && dominates(nu, mu)) { maximal = false; break; }
        if (maximal) out.insert(mu);
    }
    return out;
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
    return out;
}

std::vector<Partition> strict_partitions(int n) {
    std::vector<Partition> out;
    for (const Partition& la : all_partitions(n))
        if (la.is_strict()) out.push_back(la);
    return out;
}

std::string to_text(const Partition& la) {
    if (la.empty()) return "-";
    std::ostringstream os;
    for (int i = 0; i < la.length(); ++i) {
        if (i) os << ',';
        os << la.parts()[i];
    }
    return os.str();
}

Partition parse_partition(const std::string& text) {
    if (text == "-" || text.empty()) return Partition{};
    std::vector<int> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition text: " + text);
        }
        if (pos != tok.size()) throw std::invalid_argument("malformed partition text: " + text);
        parts.push_back(v);
    }
    return Partition(std::move(parts));  // rejects unsorted/nonpositive input
}

}  // namespace barcomb
