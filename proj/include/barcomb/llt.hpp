#pragma once

#include <map>
#include <vector>

#include "barcomb/partition.hpp"
#include "barcomb/qpoly.hpp"

namespace barcomb {

// Vector in the level-1 q-Fock space at e = 2 over the standard basis |λ⟩.
struct FockVector {
    std::map<Partition, QPoly> terms;

    void add(const Partition& la, const QPoly& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const FockVector&) const = default;
};

// Lowering operator f_i: adds one residue-i node with exponent counting
// addable-minus-removable i-nodes strictly above.
FockVector f_lower(int i, const FockVector& v);
// Divided power f_i^{(k)}.
FockVector f_divided(int i, int k, const FockVector& v);

// Weight-k domino-strip operator: adds horizontal 2-ribbon strips of k
// dominoes with coefficient (-q^{-1})^{spin}; commutes with the f_i.
FockVector boson_add(int k, const FockVector& v);

// Canonical basis of the Fock-space block with the given 2-core and weight:
// bar-invariant vectors G(μ) = |μ⟩ + Σ_{λ} d_{λμ}(q)|λ⟩ with d ∈ qZ[q],
// non-zero only for μ dominating λ.
class FockBlock {
public:
    FockBlock(Partition core, int weight);

    const Partition& core() const { return core_; }
    int weight() const { return weight_; }
    int grade() const { return core_.size() + 2 * weight_; }
    const std::vector<Partition>& labels() const { return labels_; }  // lex-descending
    const FockVector& G(const Partition& mu) const;

    // Bar involution on a standard basis vector, derived from the
    // bar-invariant spanning family (test hook).
    std::map<Partition, QRat> bar_standard(const Partition& la) const;

private:
    Partition core_;
    int weight_;
    std::vector<Partition> labels_;
    std::map<Partition, FockVector> g_;
    mutable std::map<Partition, std::map<Partition, QRat>> bar_cache_;
    void build();
};

// Shared per-block and per-grade tables (built once, then immutable).
const FockBlock& canonical_block(const Partition& core, int weight);

class CanonicalBasis {
public:
    explicit CanonicalBasis(int n);
    int grade() const { return n_; }
    const std::vector<Partition>& labels() const { return labels_; }  // lex-descending
    const FockVector& G(const Partition& mu) const;
    // d_{λμ}(q); zero polynomial when not present.
    QPoly d_poly(const Partition& la, const Partition& mu) const;

private:
    int n_;
    std::vector<Partition> labels_;
    std::map<Partition, const FockVector*> g_;
};

const CanonicalBasis& canonical_basis(int n);

// Decomposition numbers at q = 1 and the inverse matrix.
long long d_check(const Partition& la, const Partition& mu);
std::map<std::pair<Partition, Partition>, long long> d_check_inverse(int n);
long long d_check_inverse_entry(const Partition& la, const Partition& mu);

}  // namespace barcomb
