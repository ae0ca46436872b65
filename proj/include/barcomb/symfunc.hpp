#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <utility>

#include "barcomb/partition.hpp"

namespace barcomb {

enum class Basis { monomial, schur, schurP };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& name);

// Sparse element of the algebra of symmetric functions in one of the three
// bases, with exact rational coefficients.  Zero coefficients are never
// stored; schurP terms are indexed by strict partitions only.
class SymElement {
public:
    explicit SymElement(Basis basis = Basis::schur) : basis_(basis) {}
    static SymElement basis_element(Basis basis, const Partition& la);
    static SymElement zero(Basis basis) { return SymElement(basis); }

    Basis basis() const { return basis_; }
    const std::map<Partition, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpq_class coeff(const Partition& la) const;

    void add_term(const Partition& la, const mpq_class& c);
    SymElement operator+(const SymElement& o) const;
    SymElement operator-(const SymElement& o) const;
    SymElement operator*(const mpq_class& c) const;
    bool operator==(const SymElement&) const = default;

    std::string to_string() const;
    std::string to_json() const;
    static SymElement from_json(const std::string& text);

private:
    Basis basis_;
    std::map<Partition, mpq_class> terms_;
};

class TensorElement {
public:
    const std::map<std::pair<Partition, Partition>, mpq_class>& terms() const { return terms_; }
    void add_term(const Partition& a, const Partition& b, const mpq_class& c);
    bool operator==(const TensorElement&) const = default;

private:
    std::map<std::pair<Partition, Partition>, mpq_class> terms_;
};

// P_λ expanded in the Schur basis (cached).
const SymElement& schur_p_in_schur(const Partition& strict);
// ⟨P_λ, s_μ⟩.
mpq_class p_schur_coeff(const Partition& strict, const Partition& mu);

SymElement convert(const SymElement& f, Basis target);
SymElement product(const SymElement& f, const SymElement& g);
mpq_class inner(const SymElement& f, const SymElement& g);
mpq_class inner(const TensorElement& f, const TensorElement& g);
SymElement omega(const SymElement& f);
TensorElement coproduct(const SymElement& f);

// Reduction operator: s_λ ↦ Σ_μ a^λ_{μν} s_μ, extended linearly.
SymElement partial(const Partition& nu, const SymElement& f);

// 2^{N} for a horizontal strip between strict partitions, else 0.
long long hs_strip(const Partition& la, const Partition& mu);

// (∂_(a) P_λ, ∂_(1^a) P_λ, Σ_μ Hs_{λ∖μ} P_μ), all in the Schur basis.
std::array<SymElement, 3> check_drp(const Partition& strict, int a);

// Both sides of the main symmetric-function identity.
std::pair<mpq_class, mpq_class> check_mainsym(const Partition& la, const Partition& gamma,
                                              const Partition& alpha);

}  // namespace barcomb
