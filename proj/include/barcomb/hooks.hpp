#pragma once

#include <string>
#include <utility>
#include <vector>

#include "barcomb/partition.hpp"

namespace barcomb {

// Residue of a node: (c - r) mod 2.
int residue(Node n);

struct Content2 {
    long long count0 = 0;
    long long count1 = 0;
    bool operator==(const Content2&) const = default;
};

Content2 content2(const Partition& la);

// Two-runner abacus with beads at positions λ_r - r for r = 1..N.  The
// truncation N is even and at least ℓ(λ) + 2, so the quotient ordering is
// deterministic; positions below -N count as occupied.
class AbacusDisplay {
public:
    static AbacusDisplay of(const Partition& la);

    int bead_count() const { return static_cast<int>(positions_.size()); }
    const std::vector<long long>& positions() const { return positions_; }  // descending
    bool occupied(long long pos) const;
    Partition to_partition() const;

    // ASCII rendering, one row per position pair (even runner left): beads 'b',
    // gaps '.'.
    std::string render() const;

private:
    std::vector<long long> positions_;
};

Partition two_core(const Partition& la);
int two_weight(const Partition& la);

// Quotient pair pinned by the worked bead diagrams: the first component reads
// the odd-position runner, the second the even-position runner.
std::pair<Partition, Partition> two_quotient(const Partition& la);

// Inverse of (two_core, two_quotient); rejects non-core first argument.
Partition from_core_and_quotient(const Partition& core, const Partition& q0, const Partition& q1);

// (-1)^h with h the number of horizontal dominoes removed reaching ∅; zero
// when the 2-core is non-empty.
int eps_star(const Partition& la);

int hook_length(const Partition& la, Node n);

// Lemma-style node move on β = α⊔α from column c to column c+1; requires
// α'_c > α'_{c+1}.  Returns (β, γ).
std::pair<Partition, Partition> dup_move_sign(const Partition& alpha, int c);

bool is_two_core_partition(const Partition& la);

}  // namespace barcomb
