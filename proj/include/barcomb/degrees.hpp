#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "barcomb/partition.hpp"

namespace barcomb {

// Exact value m·(√2)^eps with eps ∈ {0,1}; m = 0 forces eps = 0.  Sums are
// defined for parity-compatible operands only.
class SqrtTwoScalar {
public:
    SqrtTwoScalar() = default;
    SqrtTwoScalar(mpz_class m, int eps) : m_(std::move(m)), eps_(eps) {
        if (eps_ != 0 && eps_ != 1) throw std::invalid_argument("eps must be 0 or 1");
        if (m_ == 0) eps_ = 0;
    }
    static SqrtTwoScalar integer(mpz_class m) { return {std::move(m), 0}; }
    static SqrtTwoScalar sqrt2_times(mpz_class m) { return {std::move(m), 1}; }
    // 2^{k/2} · m as an exact scalar.
    static SqrtTwoScalar pow2_half(long k, mpz_class m = 1);

    const mpz_class& coeff() const { return m_; }
    int eps() const { return eps_; }
    bool is_zero() const { return m_ == 0; }

    SqrtTwoScalar operator+(const SqrtTwoScalar& o) const;
    SqrtTwoScalar operator*(const SqrtTwoScalar& o) const;
    SqrtTwoScalar& operator+=(const SqrtTwoScalar& o) { return *this = *this + o; }
    bool operator==(const SqrtTwoScalar&) const = default;

    std::string to_string() const;  // "m" or "m*sqrt2"

private:
    mpz_class m_ = 0;
    int eps_ = 0;
};

// Bar-length degree of the spin class function labelled by a strict partition.
SqrtTwoScalar spin_degree(const Partition& strict);

// 2^{-ev/2} times the degree; always a plain integer.
SqrtTwoScalar divided_degree(const Partition& strict);
mpz_class divided_degree_int(const Partition& strict);

enum class DegreeFamily { s42, s43, s46, firstdim };
DegreeFamily degree_family_from_name(const std::string& name);

// The comparison pair (λ^a, μ^a) of the named family.
std::pair<Partition, Partition> family_pair(DegreeFamily kind, int a);

// (m,λ₁,λ₂,…) and (m,μ₁,μ₂,…); requires m > μ₁ and |λ| = |μ|.
std::pair<Partition, Partition> row_extend(const Partition& la, const Partition& mu, int m);

}  // namespace barcomb
