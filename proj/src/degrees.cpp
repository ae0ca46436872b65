#include "barcomb/degrees.hpp"

namespace barcomb {

SqrtTwoScalar SqrtTwoScalar::pow2_half(long k, mpz_class m) {
    if (k < 0) throw std::invalid_argument("pow2_half requires k >= 0");
    mpz_class val;
    mpz_ui_pow_ui(val.get_mpz_t(), 2, static_cast<unsigned long>(k / 2));
    return {m * val, static_cast<int>(k % 2)};
}

SqrtTwoScalar SqrtTwoScalar::operator+(const SqrtTwoScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (eps_ != o.eps_) throw std::domain_error("adding sqrt2-scalars of different parity");
    return {m_ + o.m_, eps_};
}

SqrtTwoScalar SqrtTwoScalar::operator*(const SqrtTwoScalar& o) const {
    mpz_class m = m_ * o.m_;
    int e = eps_ + o.eps_;
    if (e == 2) {
        m *= 2;
        e = 0;
    }
    return {std::move(m), e};
}

std::string SqrtTwoScalar::to_string() const {
    if (eps_ == 0) return m_.get_str();
    return m_.get_str() + "*sqrt2";
}

SqrtTwoScalar spin_degree(const Partition& la) {
    if (!la.is_strict()) throw std::invalid_argument("spin_degree requires a strict partition");
    long n = la.size();
    long l = la.length();
    mpq_class r;
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
    r = num;
    for (int p : la.parts()) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p));
        r /= f;
    }
    for (int i = 1; i <= la.length(); ++i)
        for (int j = i + 1; j <= la.length(); ++j) {
            r *= la.at(i) - la.at(j);
            r /= la.at(i) + la.at(j);
        }
    mpz_class half;
    mpz_ui_pow_ui(half.get_mpz_t(), 2, static_cast<unsigned long>((n - l) / 2));
    r *= half;
    if (r.get_den() != 1) throw std::logic_error("bar-length formula did not clear to an integer");
    return {r.get_num(), static_cast<int>((n - l) % 2)};
}

mpz_class divided_degree_int(const Partition& la) {
    SqrtTwoScalar d = spin_degree(la);
    int ev = la.even_parts();
    // ddeg = 2^{-ev/2}·deg; the √2 factors cancel since ev ≡ n-ℓ (mod 2).
    mpz_class m = d.coeff();
    int halves = d.eps() == 1 ? (ev - 1) / 2 : ev / 2;
    for (int i = 0; i < halves; ++i) {
        if (m % 2 != 0) throw std::logic_error("divided degree is not an integer");
        m /= 2;
    }
    return m;
}

SqrtTwoScalar divided_degree(const Partition& la) {
    return SqrtTwoScalar::integer(divided_degree_int(la));
}

DegreeFamily degree_family_from_name(const std::string& name) {
    if (name == "s42") return DegreeFamily::s42;
    if (name == "s43") return DegreeFamily::s43;
    if (name == "s46") return DegreeFamily::s46;
    if (name == "firstdim") return DegreeFamily::firstdim;
    throw std::invalid_argument("unknown degree family: " + name);
}

namespace {

// Run that may be empty when the start falls below the stop.
Partition run_or_empty(int a, int b) {
    if (a < b) return Partition{};
    return arith_run(a, b);
}

}  // namespace

std::pair<Partition, Partition> family_pair(DegreeFamily kind, int a) {
    switch (kind) {
        case DegreeFamily::s42:
            if (a < 2) throw std::invalid_argument("s42 requires a >= 2");
            return {sort_union(Partition({4 * a}), run_or_empty(4 * a - 3, 5)),
                    sort_union(run_or_empty(4 * a + 1, 9), Partition({4}))};
        case DegreeFamily::s43:
            if (a < 1) throw std::invalid_argument("s43 requires a >= 1");
            return {sort_union(Partition({4 * a}), run_or_empty(4 * a - 3, 1)),
                    run_or_empty(4 * a + 1, 5)};
        case DegreeFamily::s46:
            if (a < 1) throw std::invalid_argument("s46 requires a >= 1");
            return {sort_union(Partition({4 * a + 2}), run_or_empty(4 * a - 1, 3)),
                    sort_union(run_or_empty(4 * a + 3, 7), Partition({2}))};
        case DegreeFamily::firstdim:
            if (a < 1) throw std::invalid_argument("firstdim requires a >= 1");
            return {sort_union(sort_union(Partition({4 * a + 2}), run_or_empty(4 * a - 1, 7)),
                               Partition({2})),
                    sort_union(run_or_empty(4 * a + 3, 7), Partition({1}))};
    }
    throw std::logic_error("unreachable");
}

std::pair<Partition, Partition> row_extend(const Partition& la, const Partition& mu, int m) {
    if (la.size() != mu.size()) throw std::invalid_argument("row_extend requires equal sizes");
    if (m <= mu.at(1)) throw std::invalid_argument("row_extend requires m > μ₁");
    std::vector<int> a{m}, b{m};
    a.insert(a.end(), la.parts().begin(), la.parts().end());
    b.insert(b.end(), mu.parts().begin(), mu.parts().end());
    return {Partition(std::move(a)), Partition(std::move(b))};
}

}  // namespace barcomb
