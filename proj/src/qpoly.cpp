#include "barcomb/qpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace barcomb {

void QPoly::trim() {
    for (auto it = c_.begin(); it != c_.end();)
        it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

QPoly QPoly::monomial(int exp, mpz_class c) {
    QPoly p;
    if (c != 0) p.c_[exp] = std::move(c);
    return p;
}

mpz_class QPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? mpz_class(0) : it->second;
}

int QPoly::min_exp() const {
    if (c_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return c_.begin()->first;
}

int QPoly::max_exp() const {
    if (c_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly out = *this;
    for (const auto& [e, c] : o.c_) out.c_[e] += c;
    out.trim();
    return out;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly out = *this;
    for (const auto& [e, c] : o.c_) out.c_[e] -= c;
    out.trim();
    return out;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly out;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) out.c_[e1 + e2] += c1 * c2;
    out.trim();
    return out;
}

QPoly QPoly::operator-() const {
    QPoly out;
    for (const auto& [e, c] : c_) out.c_[e] = -c;
    return out;
}

QPoly QPoly::bar() const {
    QPoly out;
    for (const auto& [e, c] : c_) out.c_[-e] = c;
    return out;
}

QPoly QPoly::div_exact(const QPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return {};
    QPoly rem = *this;
    QPoly quot;
    const auto& [dexp, dlead] = *d.c_.rbegin();
    while (!rem.is_zero()) {
        const auto& [rexp, rlead] = *rem.c_.rbegin();
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rlead.get_mpz_t(), dlead.get_mpz_t());
        if (r != 0) throw std::domain_error("non-exact polynomial division");
        QPoly t = monomial(rexp - dexp, q);
        quot = quot + t;
        rem = rem - t * d;
    }
    return quot;
}

mpz_class QPoly::eval_one() const {
    mpz_class s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
}

bool QPoly::positive_upper() const {
    for (const auto& [e, c] : c_)
        if (e < 1 || c < 0) return false;
    return true;
}

std::string QPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        mpz_class c = it->second;
        int e = it->first;
        if (!first) os << (c > 0 ? "+" : "-");
        else if (c < 0) os << "-";
        first = false;
        mpz_class a = abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            os << 'q';
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

QPoly quantum_int(int k) {
    QPoly out;
    for (int e = 1 - k; e <= k - 1; e += 2) out = out + QPoly::monomial(e);
    return out;
}

QPoly quantum_factorial(int k) {
    QPoly out(1);
    for (int j = 2; j <= k; ++j) out = out * quantum_int(j);
    return out;
}

namespace {

// Primitive non-Laurent normal form: minimum exponent 0, content 1, positive
// leading coefficient.
QPoly primitive(const QPoly& p) {
    if (p.is_zero()) return p;
    mpz_class content = 0;
    for (const auto& [e, c] : p.coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (p.coeffs().rbegin()->second < 0) content = -content;
    QPoly shift = QPoly::monomial(-p.min_exp());
    return (p * shift).div_exact(QPoly(content));
}

// Pseudo-remainder based Euclid on primitive parts.
QPoly gcd_primitive(QPoly a, QPoly b) {
    a = primitive(a);
    b = primitive(b);
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        int da = a.max_exp(), db = b.max_exp();
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        mpz_class lead = b.coeffs().rbegin()->second;
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(da - db + 1));
        QPoly rem = a * QPoly(scale);
        while (!rem.is_zero() && rem.max_exp() >= db) {
            mpz_class q = rem.coeffs().rbegin()->second / lead;
            rem = rem - b * QPoly::monomial(rem.max_exp() - db, q);
        }
        a = b;
        b = rem.is_zero() ? rem : primitive(rem);
    }
    return a;
}

}  // namespace

QPoly qpoly_gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive(b);
    if (b.is_zero()) return primitive(a);
    return gcd_primitive(a, b);
}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    reduce();
}

void QRat::reduce() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    QPoly g = qpoly_gcd(num_, den_);
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
    // Normalize the denominator to a primitive polynomial with positive lead
    // and zero minimum exponent; fold units into the numerator.
    QPoly shift = QPoly::monomial(-den_.min_exp());
    num_ = num_ * shift;
    den_ = den_ * shift;
    mpz_class content = 0;
    for (const auto& [e, c] : den_.coeffs())
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (den_.coeffs().rbegin()->second < 0) content = -content;
    if (content != 1) {
        // Denominator content must divide cleanly or stay as a fraction: keep
        // exactness by scaling the numerator instead when possible.
        bool divides = true;
        for (const auto& [e, c] : num_.coeffs())
            if (!mpz_divisible_p(c.get_mpz_t(), content.get_mpz_t())) { divides = false; break; }
        if (divides) {
            num_ = num_.div_exact(QPoly(content));
            den_ = den_.div_exact(QPoly(content));
        }
    }
}

bool QRat::is_laurent() const {
    if (num_.is_zero()) return true;
    return den_.coeffs().size() == 1 && abs(den_.coeffs().begin()->second) == 1;
}

QPoly QRat::as_laurent() const {
    if (num_.is_zero()) return {};
    // A denominator dividing the numerator exactly is fine too.
    if (!is_laurent()) return num_.div_exact(den_);
    auto it = den_.coeffs().begin();
    QPoly out = num_ * QPoly::monomial(-it->first);
    if (it->second < 0) out = -out;
    return out;
}

QRat QRat::operator+(const QRat& o) const {
    return QRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator-(const QRat& o) const {
    return QRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator*(const QRat& o) const { return QRat(num_ * o.num_, den_ * o.den_); }

QRat QRat::operator/(const QRat& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return QRat(num_ * o.den_, den_ * o.num_);
}

bool QRat::operator==(const QRat& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

QRat QRat::bar() const {
    if (num_.is_zero()) return {};
    return QRat(num_.bar(), den_.bar());
}

}  // namespace barcomb
