#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "barcomb/degrees.hpp"
#include "barcomb/partition.hpp"

namespace barcomb {

// Block of the double cover with 2-core σ and weight w ≤ ℓ(σ)+1; τ is the
// 4-bar-core with double(τ) = σ.
struct RouquierBlock {
    Partition sigma;
    int weight = 0;
    Partition tau;
};

RouquierBlock make_rouquier_block(const Partition& sigma, int weight);

struct BlockLabels {
    std::vector<Partition> brauer;                          // σ + 2μ
    std::vector<std::pair<Partition, Partition>> spin;      // (α, β) pairs
};
BlockLabels block_labels(const RouquierBlock& b);

Partition spin_label_partition(const RouquierBlock& b, const Partition& alpha,
                               const Partition& beta);

// Decomposition matrix of grade n, unitriangular with D_{λμ} = 0 unless μ ⊵ λ.
class DMatrix {
public:
    DMatrix(int n, std::map<std::pair<Partition, Partition>, mpz_class> entries);
    static DMatrix parse(const std::string& text);
    static DMatrix load_file(const std::string& path);
    static const DMatrix& shipped(int grade);  // grades 0..4

    int grade() const { return n_; }
    mpz_class at(const Partition& la, const Partition& mu) const;
    std::string to_text() const;

private:
    int n_;
    std::map<std::pair<Partition, Partition>, mpz_class> e_;
    void validate() const;
};

// ⟨ω^μ, ⟨τ+4α⊔2β⟩⟩ = 2^{ℓ(β)/2} Σ_{γ,ζ} ⟨P_β,s_ζ⟩ a^μ_{γζ} ε*(γ) a^α_{γ⁰γ¹}.
SqrtTwoScalar omega_spin_coeff(const RouquierBlock& b, const Partition& mu,
                               const Partition& alpha, const Partition& beta);

// D^spn entry against the Brauer label σ+2μ, via the ingested D-matrix.
SqrtTwoScalar rouq_spin_decomposition(const RouquierBlock& b, const Partition& mu,
                                      const Partition& alpha, const Partition& beta,
                                      const DMatrix& d);

// f_•^(a) ω^λ = Σ_μ a^μ_{λ(1^a)} ω^μ.
std::map<Partition, long long> ffd_bullet_omega(const RouquierBlock& b, const Partition& la,
                                                int a);

// Coefficient of ⟨τ+4γ⊔2ζ⟩ in f_•^(a) ⟨τ+4α⊔2β⟩.
SqrtTwoScalar ffd_bullet_spin(const RouquierBlock& b, const Partition& alpha,
                              const Partition& beta, const Partition& gamma,
                              const Partition& zeta);

}  // namespace barcomb
