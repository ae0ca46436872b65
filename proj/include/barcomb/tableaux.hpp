#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "barcomb/partition.hpp"

namespace barcomb {

struct Tableau {
    SkewShape shape;
    std::map<Node, int> entries;
    std::string render() const;
};

// Number of semistandard tableaux of shape la and type mu (mu a composition).
long long kostka(const Partition& la, const std::vector<int>& mu);

// Littlewood-Richardson coefficient a^γ_{αβ}.
long long lr_coeff(const Partition& gamma, const Partition& alpha, const Partition& beta);

// Triple coefficient a^ζ_{α,βγ} = Σ_μ a^ζ_{αμ} a^μ_{βγ}.
long long lr_coeff_multi(const Partition& zeta, const Partition& alpha, const Partition& beta,
                         const Partition& gamma);

// a^γ_{α(1•)} = 1 iff γ∖α is a vertical strip.
int lrcb(const Partition& gamma, const Partition& alpha);
long long lrcb_multi(const Partition& zeta, const Partition& alpha, const Partition& beta);

bool is_horizontal_strip(const SkewShape& s);
bool is_vertical_strip(const SkewShape& s);

// One LR tableau of shape γ∖α and type β, when the coefficient is non-zero.
std::optional<Tableau> lr_witness(const Partition& gamma, const Partition& alpha,
                                  const Partition& beta);

// Partitions γ with a^γ_{αβ} ≠ 0, with coefficients.
std::map<Partition, long long> lr_expand(const Partition& alpha, const Partition& beta);

}  // namespace barcomb
