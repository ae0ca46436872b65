#pragma once

#include <optional>
#include <set>
#include <string>

#include "barcomb/partition.hpp"

namespace barcomb {

// λ_r - λ_{r+1} + 1 divisible by a power of 2 exceeding λ_{r+1} - λ_{r+2}.
bool is_two_carter(const Partition& la);
// Equivalent form: constant 2-adic hook valuations down every column.
bool is_two_carter_by_hooks(const Partition& la);

struct SeparatedDecomp {
    Partition tau;    // a 4-bar-core
    Partition alpha;
    Partition beta;   // strict
    bool operator==(const SeparatedDecomp&) const = default;
};

// The unique expression τ + 4α ⊔ 2β with τ₁ ≥ 4ℓ(α) + 2β₁ - 3, if any.
std::optional<SeparatedDecomp> separated_decompose(const Partition& strict);
bool is_separated(const Partition& strict);

// For separated λ: β is a 2-core and α is 2-Carter.
bool is_homogeneous_separated(const Partition& strict);

struct ExceptionalSets {
    std::set<Partition> scrR;     // seven reducible exceptions
    std::set<Partition> special2; // four irreducible exceptions with two even parts
};
const ExceptionalSets& exceptional_sets();

enum class Verdict { irreducible, reducible };

struct Classification {
    Verdict verdict;
    std::string reason;
    std::optional<SeparatedDecomp> decomposition;
};

// Whether the spin character(s) of the double cover of the alternating group
// labelled by a strict partition remain irreducible in characteristic 2.
Classification classify_alt_spin(const Partition& strict);

// Membership in the homogeneous-label families, keyed by the number of even
// parts (0, 1 or 2); empty when the label is not homogeneous.
std::optional<int> ird_membership(const Partition& strict);

}  // namespace barcomb
