#include "barcomb/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "barcomb/hooks.hpp"
#include "barcomb/tableaux.hpp"

namespace barcomb {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::monomial: return "m";
        case Basis::schur: return "s";
        case Basis::schurP: return "P";
    }
    return "?";
}

Basis basis_from_name(const std::string& name) {
    if (name == "m" || name == "monomial") return Basis::monomial;
    if (name == "s" || name == "schur") return Basis::schur;
    if (name == "P" || name == "schurP") return Basis::schurP;
    throw std::invalid_argument("unknown basis: " + name);
}

SymElement SymElement::basis_element(Basis basis, const Partition& la) {
    if (basis == Basis::schurP && !la.is_strict())
        throw std::invalid_argument("schurP basis is indexed by strict partitions");
    SymElement e(basis);
    e.terms_[la] = 1;
    return e;
}

mpq_class SymElement::coeff(const Partition& la) const {
    auto it = terms_.find(la);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void SymElement::add_term(const Partition& la, const mpq_class& c) {
    if (basis_ == Basis::schurP && !la.is_strict())
        throw std::invalid_argument("schurP basis is indexed by strict partitions");
    mpq_class& v = terms_[la];
    v += c;
    if (v == 0) terms_.erase(la);
}

SymElement SymElement::operator+(const SymElement& o) const {
    if (basis_ != o.basis_) throw std::invalid_argument("basis mismatch in addition");
    SymElement out = *this;
    for (const auto& [la, c] : o.terms_) out.add_term(la, c);
    return out;
}

SymElement SymElement::operator-(const SymElement& o) const {
    if (basis_ != o.basis_) throw std::invalid_argument("basis mismatch in subtraction");
    SymElement out = *this;
    for (const auto& [la, c] : o.terms_) out.add_term(la, -c);
    return out;
}

SymElement SymElement::operator*(const mpq_class& c) const {
    SymElement out(basis_);
    if (c == 0) return out;
    for (const auto& [la, v] : terms_) out.terms_[la] = v * c;
    return out;
}

std::string SymElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print large terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [la, c] = *it;
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c.get_str() << '*';
        os << basis_name(basis_) << '(' << to_text(la) << ')';
    }
    return os.str();
}

std::string SymElement::to_json() const {
    nlohmann::json j;
    j["basis"] = basis_name(basis_);
    j["terms"] = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [la, c] = *it;
        nlohmann::json t;
        t["partition"] = la.parts();
        mpz_class num = c.get_num(), den = c.get_den();
        if (num.fits_slong_p() && den.fits_slong_p()) {
            t["num"] = num.get_si();
            t["den"] = den.get_si();
        } else {
            t["num"] = num.get_str();
            t["den"] = den.get_str();
        }
        j["terms"].push_back(t);
    }
    return j.dump();
}

SymElement SymElement::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SymElement e(basis_from_name(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms")) {
        std::vector<int> parts = t.at("partition").get<std::vector<int>>();
        auto read_int = [](const nlohmann::json& v) {
            return v.is_string() ? mpz_class(v.get<std::string>())
                                 : mpz_class(static_cast<long>(v.get<long long>()));
        };
        mpq_class c(read_int(t.at("num")), t.contains("den") ? read_int(t.at("den")) : 1);
        c.canonicalize();
        e.add_term(Partition(parts), c);
    }
    return e;
}

void TensorElement::add_term(const Partition& a, const Partition& b, const mpq_class& c) {
    mpq_class& v = terms_[{a, b}];
    v += c;
    if (v == 0) terms_.erase({a, b});
}

namespace {

// Shifted semistandard tableaux of shape λ over symbols 1'..n', 1..n, counted
// by content; yields the monomial expansion of P_λ.
std::map<Partition, mpz_class> shifted_monomial_counts(const Partition& la) {
    std::map<Partition, mpz_class> out;
    if (la.empty()) {
        out[Partition{}] = 1;
        return out;
    }
    int n = la.size();
    int rows = la.length();
    // code = 2v + s, s = 0 for primed (x−), 1 for unprimed (x+)
    std::vector<std::vector<int>> grid(rows + 1);
    for (int r = 1; r <= rows; ++r) grid[r].assign(la.at(r), 0);
    std::vector<int> content(n + 1, 0);
    auto cell_code = [&](int r, int c) -> int {  // c is the absolute column
        if (r < 1 || r > rows) return 0;
        int off = c - r;
        if (off < 0 || off >= la.at(r)) return 0;
        return grid[r][off];
    };
    auto rec = [&](auto&& self, int r, int off) -> void {
        if (r > rows) {
            std::vector<int> ct;
            for (int v = 1; v <= n; ++v) ct.push_back(content[v]);
            while (!ct.empty() && ct.back() == 0) ct.pop_back();
            bool is_partition = true;
            for (size_t i = 0; i < ct.size() && is_partition; ++i)
                is_partition = ct[i] > 0 && (i + 1 == ct.size() || ct[i] >= ct[i + 1]);
            if (is_partition) out[Partition(ct)] += 1;
            return;
        }
        if (off == la.at(r)) {
            self(self, r + 1, 0);
            return;
        }
        int c = r + off;  // absolute column
        int left = off > 0 ? grid[r][off - 1] : 0;
        int above = cell_code(r - 1, c);
        int lo = std::max({left, above, 2});
        for (int code = lo; code <= 2 * n + 1; ++code) {
            int s = code % 2;
            if (c == r && s == 0) continue;            // diagonal entries unprimed
            if (code == left && s == 0) continue;      // x− once per row
            if (code == above && s == 1) continue;     // x+ once per column
            grid[r][off] = code;
            content[code / 2]++;
            self(self, r, off + 1);
            content[code / 2]--;
            grid[r][off] = 0;
        }
    };
    rec(rec, 1, 0);
    return out;
}

// Per-grade Kostka data for monomial ↔ Schur conversion.
struct GradeTable {
    std::vector<Partition> parts;                 // descending lexicographic
    std::map<Partition, int> index;
    std::vector<std::vector<long long>> kostka_m;  // s_λ = Σ K[λ][μ] m_μ
    std::vector<std::vector<long long>> kostka_inv;
};

std::map<int, GradeTable> grade_tables;
std::mutex grade_mutex;

const GradeTable& grade_table(int n) {
    std::lock_guard lock(grade_mutex);
    auto it = grade_tables.find(n);
    if (it != grade_tables.end()) return it->second;
    GradeTable t;
    t.parts = all_partitions(n);
    std::sort(t.parts.begin(), t.parts.end(), std::greater<Partition>());
    int m = static_cast<int>(t.parts.size());
    for (int i = 0; i < m; ++i) t.index[t.parts[i]] = i;
    t.kostka_m.assign(m, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t.kostka_m[i][j] = kostka(t.parts[i], t.parts[j].parts());
    // Unitriangular inverse over the integers.
    t.kostka_inv.assign(m, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i) {
        t.kostka_inv[i][i] = 1;
        for (int j = i + 1; j < m; ++j) {
            long long acc = 0;
            for (int k = i; k < j; ++k) acc += t.kostka_inv[i][k] * t.kostka_m[k][j];
            t.kostka_inv[i][j] = -acc;
        }
    }
    return grade_tables.emplace(n, std::move(t)).first->second;
}

std::map<Partition, SymElement> schur_p_cache;
std::mutex schur_p_mutex;

SymElement to_schur_from_monomial(const SymElement& f);

SymElement compute_schur_p(const Partition& la) {
    SymElement mono(Basis::monomial);
    for (const auto& [mu, c] : shifted_monomial_counts(la)) mono.add_term(mu, mpq_class(c));
    return to_schur_from_monomial(mono);
}

SymElement to_monomial_from_schur(const SymElement& f) {
    SymElement out(Basis::monomial);
    for (const auto& [la, c] : f.terms()) {
        const GradeTable& t = grade_table(la.size());
        int i = t.index.at(la);
        for (size_t j = 0; j < t.parts.size(); ++j)
            if (t.kostka_m[i][j]) out.add_term(t.parts[j], c * mpq_class(static_cast<long>(t.kostka_m[i][j])));
    }
    return out;
}

SymElement to_schur_from_monomial(const SymElement& f) {
    SymElement out(Basis::schur);
    for (const auto& [mu, c] : f.terms()) {
        const GradeTable& t = grade_table(mu.size());
        int i = t.index.at(mu);
        for (size_t j = 0; j < t.parts.size(); ++j)
            if (t.kostka_inv[i][j]) out.add_term(t.parts[j], c * mpq_class(static_cast<long>(t.kostka_inv[i][j])));
    }
    return out;
}

}  // namespace

const SymElement& schur_p_in_schur(const Partition& la) {
    if (!la.is_strict()) throw std::invalid_argument("Schur P-functions need strict labels");
    std::lock_guard lock(schur_p_mutex);
    auto it = schur_p_cache.find(la);
    if (it != schur_p_cache.end()) return it->second;
    return schur_p_cache.emplace(la, compute_schur_p(la)).first->second;
}

mpq_class p_schur_coeff(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size()) return 0;
    return schur_p_in_schur(la).coeff(mu);
}

SymElement convert(const SymElement& f, Basis target) {
    if (f.basis() == target) return f;
    if (f.basis() == Basis::monomial && target == Basis::schur) return to_schur_from_monomial(f);
    if (f.basis() == Basis::schur && target == Basis::monomial) return to_monomial_from_schur(f);
    if (f.basis() == Basis::schurP) {
        SymElement s(Basis::schur);
        for (const auto& [la, c] : f.terms()) s = s + schur_p_in_schur(la) * c;
        return target == Basis::schur ? s : convert(s, target);
    }
    if (target == Basis::schurP) {
        SymElement s = convert(f, Basis::schur);
        SymElement out(Basis::schurP);
        while (!s.is_zero()) {
            // The lexicographically largest term is dominance-maximal.
            auto it = std::prev(s.terms().end());
            Partition la = it->first;
            mpq_class c = it->second;
            if (!la.is_strict())
                throw std::domain_error("element is not in the span of Schur P-functions");
            out.add_term(la, c);
            s = s - schur_p_in_schur(la) * c;
        }
        return out;
    }
    throw std::logic_error("unhandled conversion");
}

SymElement product(const SymElement& f, const SymElement& g) {
    SymElement a = convert(f, Basis::schur), b = convert(g, Basis::schur);
    SymElement out(Basis::schur);
    for (const auto& [la, c] : a.terms())
        for (const auto& [mu, d] : b.terms())
            for (const auto& [ga, k] : lr_expand(la, mu))
                out.add_term(ga, c * d * mpq_class(static_cast<long>(k)));
    return out;
}

mpq_class inner(const SymElement& f, const SymElement& g) {
    SymElement a = convert(f, Basis::schur), b = convert(g, Basis::schur);
    mpq_class out = 0;
    for (const auto& [la, c] : a.terms()) out += c * b.coeff(la);
    return out;
}

mpq_class inner(const TensorElement& f, const TensorElement& g) {
    mpq_class out = 0;
    for (const auto& [k, c] : f.terms()) {
        auto it = g.terms().find(k);
        if (it != g.terms().end()) out += c * it->second;
    }
    return out;
}

SymElement omega(const SymElement& f) {
    SymElement s = convert(f, Basis::schur);
    SymElement out(Basis::schur);
    for (const auto& [la, c] : s.terms()) out.add_term(conjugate(la), c);
    return convert(out, f.basis());
}

TensorElement coproduct(const SymElement& f) {
    SymElement s = convert(f, Basis::schur);
    TensorElement out;
    for (const auto& [la, c] : s.terms()) {
        int n = la.size();
        for (int k = 0; k <= n; ++k)
            for (const Partition& mu : all_partitions(k)) {
                if (!contains(la, mu)) continue;
                for (const Partition& nu : all_partitions(n - k)) {
                    long long a = lr_coeff(la, mu, nu);
                    if (a) out.add_term(mu, nu, c * mpq_class(static_cast<long>(a)));
                }
            }
    }
    return out;
}

SymElement partial(const Partition& nu, const SymElement& f) {
    SymElement s = convert(f, Basis::schur);
    SymElement out(Basis::schur);
    for (const auto& [la, c] : s.terms()) {
        int k = la.size() - nu.size();
        if (k < 0) continue;
        for (const Partition& mu : all_partitions(k)) {
            if (!contains(la, mu)) continue;
            long long a = lr_coeff(la, mu, nu);
            if (a) out.add_term(mu, c * mpq_class(static_cast<long>(a)));
        }
    }
    return out;
}

long long hs_strip(const Partition& la, const Partition& mu) {
    if (!la.is_strict() || !mu.is_strict())
        throw std::invalid_argument("hs_strip requires strict partitions");
    if (!contains(la, mu)) return 0;
    SkewShape s(la, mu);
    if (!is_horizontal_strip(s)) return 0;
    Partition lc = conjugate(la), mc = conjugate(mu);
    long long n = 0;
    for (int c = 1; c <= la.at(1); ++c) {
        bool in_next = lc.at(c + 1) > mc.at(c + 1);
        bool in_this = lc.at(c) > mc.at(c);
        if (in_next && !in_this) n++;
    }
    long long out = 1;
    for (long long i = 0; i < n; ++i) out *= 2;
    return out;
}

std::array<SymElement, 3> check_drp(const Partition& la, int a) {
    if (!la.is_strict()) throw std::invalid_argument("check_drp requires a strict partition");
    const SymElement& p = schur_p_in_schur(la);
    SymElement row = partial(Partition(a > 0 ? std::vector<int>{a} : std::vector<int>{}), p);
    SymElement col = partial(Partition(std::vector<int>(a, 1)), p);
    SymElement rhs(Basis::schur);
    for (const Partition& mu : strict_partitions(la.size() - a)) {
        long long h = hs_strip(la, mu);
        if (h) rhs = rhs + schur_p_in_schur(mu) * mpq_class(static_cast<long>(h));
    }
    return {row, col, rhs};
}

std::pair<mpq_class, mpq_class> check_mainsym(const Partition& la, const Partition& gamma,
                                              const Partition& alpha) {
    if (!alpha.is_strict()) throw std::invalid_argument("check_mainsym requires strict α");
    mpq_class lhs = 0, rhs = 0;
    int msize = 2 * gamma.size() + alpha.size();
    // Left side: Σ_{μ,ν,ζ} a^μ_{λ(1•)} ⟨P_α,s_ζ⟩ ε*(ν) a^γ_{ν⁰ν¹} a^μ_{νζ}
    if (msize >= la.size()) {
        for (const Partition& nu : all_partitions(2 * gamma.size())) {
            int eps = eps_star(nu);
            if (!eps) continue;
            auto [n0, n1] = two_quotient(nu);
            long long ag = lr_coeff(gamma, n0, n1);
            if (!ag) continue;
            for (const Partition& zeta : all_partitions(alpha.size())) {
                mpq_class pz = p_schur_coeff(alpha, zeta);
                if (pz == 0) continue;
                for (const Partition& mu : all_partitions(msize)) {
                    if (!lrcb(mu, la)) continue;
                    long long am = lr_coeff(mu, nu, zeta);
                    if (am) lhs += mpq_class(static_cast<long>(eps * ag)) * pz * mpq_class(static_cast<long>(am));
                }
            }
        }
    }
    // Right side: Σ_{β,η,ξ} Hs_{α∖β} ⟨P_β,s_η⟩ ε*(ξ) a^γ_{ξ⁰ξ¹(1•)} a^λ_{ξη}
    for (int bsize = 0; bsize <= alpha.size(); ++bsize) {
        for (const Partition& beta : strict_partitions(bsize)) {
            long long h = hs_strip(alpha, beta);
            if (!h) continue;
            for (const Partition& eta : all_partitions(bsize)) {
                mpq_class pe = p_schur_coeff(beta, eta);
                if (pe == 0) continue;
                int xsize = la.size() - eta.size();
                if (xsize < 0 || xsize % 2) continue;
                for (const Partition& xi : all_partitions(xsize)) {
                    int eps = eps_star(xi);
                    if (!eps) continue;
                    long long al = lr_coeff(la, xi, eta);
                    if (!al) continue;
                    auto [x0, x1] = two_quotient(xi);
                    long long gb = lrcb_multi(gamma, x0, x1);
                    if (gb)
                        rhs += mpq_class(static_cast<long>(h)) * pe * mpq_class(eps) *
                               mpq_class(static_cast<long>(gb * al));
                }
            }
        }
    }
    return {lhs, rhs};
}

}  // namespace barcomb
