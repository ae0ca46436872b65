#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace barcomb {

// Weakly decreasing positive parts; trailing zeros never stored, so structural
// equality is mathematical equality and Partition is safe as a map key.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    // Sorts descending and drops zeros before validating.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }

    // 1-based with the infinite-tail convention: at(r) = 0 for r > length().
    int at(int r) const {
        return (r >= 1 && r <= static_cast<int>(parts_.size())) ? parts_[r - 1] : 0;
    }

    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    bool is_strict() const;
    int even_parts() const;  // ev: number of positive even parts

    bool operator==(const Partition&) const = default;
    // Lexicographic; within a fixed size this is a linear extension of dominance.
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    void validate() const;
};

struct Node {
    int row = 0;
    int col = 0;
    bool operator==(const Node&) const = default;
    auto operator<=>(const Node&) const = default;
};

// Skew shape λ∖μ; two shapes are equal iff their node sets are equal.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);
    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    std::vector<Node> cells() const;
    int size() const { return outer_.size() - inner_.size(); }
    bool operator==(const SkewShape& other) const { return cells() == other.cells(); }

private:
    Partition outer_, inner_;
};

Partition conjugate(const Partition& la);
bool dominates(const Partition& la, const Partition& mu);
// Cellwise containment μ ⊆ λ (any sizes).
bool contains(const Partition& la, const Partition& mu);

Partition plus(const Partition& la, const Partition& mu);
Partition scale(int m, const Partition& la);
Partition sort_union(const Partition& la, const Partition& mu);

// The arithmetic progression a, a-4, ..., b (a ≡ b mod 4, a ≥ b ≥ 0); a final
// zero is dropped.
Partition arith_run(int a, int b);

// Partitions covered by λ in the dominance order on partitions of |λ|.
std::set<Partition> dominance_covers(const Partition& la);

std::vector<Node> cells_of(const Partition& la);
std::vector<Node> addable_nodes(const Partition& la);
std::vector<Node> removable_nodes(const Partition& la);

std::vector<Partition> all_partitions(int n);
std::vector<Partition> strict_partitions(int n);

// Canonical text form "a,b,c"; the empty partition is spelled "-".
std::string to_text(const Partition& la);
Partition parse_partition(const std::string& text);

}  // namespace barcomb
