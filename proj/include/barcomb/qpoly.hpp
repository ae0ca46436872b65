#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace barcomb {

// Sparse integer Laurent polynomial in q.
class QPoly {
public:
    QPoly() = default;
    QPoly(long c) { if (c != 0) c_[0] = c; }
    QPoly(mpz_class c) { if (c != 0) c_[0] = std::move(c); }
    static QPoly monomial(int exp, mpz_class c = 1);

    const std::map<int, mpz_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    mpz_class coeff(int exp) const;
    int min_exp() const;
    int max_exp() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    bool operator==(const QPoly&) const = default;

    // Substitution q -> q^{-1}.
    QPoly bar() const;
    // Exact division; throws if the remainder is non-zero.
    QPoly div_exact(const QPoly& d) const;
    mpz_class eval_one() const;  // value at q = 1
    bool bar_symmetric() const { return bar() == *this; }
    // All exponents ≥ 1 and all coefficients ≥ 0 (the canonical-basis shape).
    bool positive_upper() const;

    std::string to_string() const;  // e.g. "q^2+2q+1", "0"

private:
    std::map<int, mpz_class> c_;
    void trim();
};

// Quantum integer [k] = q^{k-1} + q^{k-3} + … + q^{1-k} and [k]!.
QPoly quantum_int(int k);
QPoly quantum_factorial(int k);

// gcd of Laurent polynomials, normalized primitive with positive leading
// coefficient and minimum exponent zero.
QPoly qpoly_gcd(const QPoly& a, const QPoly& b);

// Rational function num/den in q, kept reduced.
class QRat {
public:
    QRat() = default;
    QRat(QPoly num) : num_(std::move(num)) {}
    QRat(QPoly num, QPoly den);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const;
    QPoly as_laurent() const;  // throws unless denominator is a unit

    QRat operator+(const QRat& o) const;
    QRat operator-(const QRat& o) const;
    QRat operator*(const QRat& o) const;
    QRat operator/(const QRat& o) const;
    bool operator==(const QRat& o) const;

    QRat bar() const;

private:
    QPoly num_ = QPoly();
    QPoly den_ = QPoly(1);
    void reduce();
};

}  // namespace barcomb
