#include "barcomb/llt.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "barcomb/hooks.hpp"
#include "barcomb/regularise.hpp"

namespace barcomb {

void FockVector::add(const Partition& la, const QPoly& c) {
    if (c.is_zero()) return;
    QPoly& v = terms[la];
    v = v + c;
    if (v.is_zero()) terms.erase(la);
}

FockVector f_lower(int i, const FockVector& v) {
    FockVector out;
    for (const auto& [la, c] : v.terms) {
        std::vector<Node> add, rem;
        for (Node n : addable_nodes(la))
            if (residue(n) == i) add.push_back(n);
        for (Node n : removable_nodes(la))
            if (residue(n) == i) rem.push_back(n);
        for (Node n : add) {
            int exponent = 0;
            for (Node a : add) exponent += (a.row < n.row);
            for (Node r : rem) exponent -= (r.row < n.row);
            std::vector<int> parts(la.parts());
            if (n.row - 1 >= static_cast<int>(parts.size())) parts.resize(n.row, 0);
            parts[n.row - 1]++;
            out.add(Partition(std::move(parts)), c * QPoly::monomial(exponent));
        }
    }
    return out;
}

FockVector f_divided(int i, int k, const FockVector& v) {
    FockVector out = v;
    for (int j = 0; j < k; ++j) out = f_lower(i, out);
    if (k >= 2) {
        QPoly fact = quantum_factorial(k);
        FockVector div;
        for (const auto& [la, c] : out.terms) div.terms[la] = c.div_exact(fact);
        out = std::move(div);
    }
    return out;
}

namespace {

// Horizontal-strip extensions of a partition adding exactly k cells.
void horizontal_extensions(const Partition& pi, int k, std::vector<Partition>& out) {
    std::vector<int> rows;
    int len = pi.length() + 1;
    auto rec = [&](auto&& self, int r, int budget) -> void {
        if (r > len) {
            if (budget == 0) {
                std::vector<int> parts = rows;
                while (!parts.empty() && parts.back() == 0) parts.pop_back();
                out.emplace_back(parts);
            }
            return;
        }
        int lo = pi.at(r);
        int hi = (r == 1) ? pi.at(1) + budget : std::min(pi.at(r - 1), pi.at(r) + budget);
        for (int v = lo; v <= hi; ++v) {
            rows.push_back(v);
            self(self, r + 1, budget - (v - lo));
            rows.pop_back();
        }
    };
    rec(rec, 1, k);
}

// Number of vertical dominoes in the bottom-right peel tiling.
int strip_spin(const Partition& mu, const Partition& la) {
    std::set<Node> cells;
    for (int r = 1; r <= mu.length(); ++r)
        for (int c = la.at(r) + 1; c <= mu.at(r); ++c) cells.insert({r, c});
    int spin = 0;
    while (!cells.empty()) {
        Node pick{0, 0};
        for (Node n : cells)
            if (n.col > pick.col || (n.col == pick.col && n.row > pick.row)) pick = n;
        Node up{pick.row - 1, pick.col};
        Node left{pick.row, pick.col - 1};
        cells.erase(pick);
        if (cells.count(up)) {
            cells.erase(up);
            spin++;
        } else if (cells.count(left)) {
            cells.erase(left);
        } else {
            throw std::logic_error("strip is not domino-tileable by bottom-right peel");
        }
    }
    return spin;
}

}  // namespace

FockVector boson_add(int k, const FockVector& v) {
    if (k <= 0) throw std::invalid_argument("boson weight must be positive");
    FockVector out;
    for (const auto& [la, c] : v.terms) {
        Partition core = two_core(la);
        auto [q0, q1] = two_quotient(la);
        for (int j = 0; j <= k; ++j) {
            std::vector<Partition> ext0, ext1;
            horizontal_extensions(q0, j, ext0);
            horizontal_extensions(q1, k - j, ext1);
            for (const Partition& e0 : ext0)
                for (const Partition& e1 : ext1) {
                    Partition mu = from_core_and_quotient(core, e0, e1);
                    if (!contains(mu, la)) continue;
                    int spin = strip_spin(mu, la);
                    QPoly coeff = QPoly::monomial(-spin, spin % 2 ? -1 : 1);
                    out.add(mu, c * coeff);
                }
        }
    }
    return out;
}

namespace {

Partition lex_top(const FockVector& v) { return v.terms.rbegin()->first; }

// Ladder monomial m(κ) for a 2-regular partition.
FockVector ladder_monomial(const Partition& ka) {
    FockVector v;
    v.add(Partition{}, QPoly(1));
    if (ka.empty()) return v;
    int max_l = ka.length() + ka.at(1);
    for (int l = 0; l <= max_l; ++l) {
        int count = static_cast<int>(lad(ka, l));
        if (count) v = f_divided(l % 2, count, v);
    }
    return v;
}

}  // namespace

FockBlock::FockBlock(Partition core, int weight) : core_(std::move(core)), weight_(weight) {
    if (two_core(core_) != core_) throw std::invalid_argument("block core must be a 2-core");
    if (weight_ < 0) throw std::invalid_argument("block weight must be non-negative");
    build();
}

void FockBlock::build() {
    int n = grade();
    for (const Partition& la : all_partitions(n))
        if (two_core(la) == core_) labels_.push_back(la);
    std::sort(labels_.begin(), labels_.end(), std::greater<Partition>());

    // Bar-invariant spanning family: domino-strip operators applied to ladder
    // monomials of the 2-regular labels of lower weight in the same tower.
    std::vector<FockVector> vecs;
    for (int k = 0; k <= weight_; ++k) {
        std::vector<Partition> kappas;
        for (const Partition& ka : strict_partitions(n - 2 * k))
            if (two_core(ka) == core_) kappas.push_back(ka);
        for (const Partition& nu : all_partitions(k)) {
            for (const Partition& ka : kappas) {
                FockVector v = ladder_monomial(ka);
                for (int part : nu.parts()) v = boson_add(part, v);
                if (!v.is_zero()) vecs.push_back(std::move(v));
            }
        }
    }
    if (vecs.size() != labels_.size())
        throw std::logic_error("spanning family size does not match the block");

    // Fraction-free echelon against the lexicographic order, using the
    // bar-symmetric top coefficients as multipliers.
    std::map<Partition, FockVector> echelon;
    for (FockVector v : vecs) {
        for (;;) {
            if (v.is_zero()) throw std::logic_error("dependent vector in Fock spanning family");
            Partition top = lex_top(v);
            QPoly a = v.terms.at(top);
            if (!a.bar_symmetric())
                throw std::logic_error("top coefficient is not bar-symmetric");
            auto it = echelon.find(top);
            if (it == echelon.end()) {
                // Reduce the integer content to tame growth.
                mpz_class content = 0;
                for (const auto& [la, c] : v.terms)
                    for (const auto& [e, z] : c.coeffs())
                        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
                if (content > 1) {
                    FockVector w;
                    for (const auto& [la, c] : v.terms) w.terms[la] = c.div_exact(QPoly(content));
                    v = std::move(w);
                }
                echelon.emplace(top, std::move(v));
                break;
            }
            const FockVector& u = it->second;
            QPoly b = u.terms.at(top);
            FockVector next;
            for (const auto& [la, c] : v.terms) next.add(la, c * b);
            for (const auto& [la, c] : u.terms) next.add(la, -(c * a));
            v = std::move(next);
        }
    }
    for (const Partition& la : labels_)
        if (!echelon.count(la)) throw std::logic_error("echelon did not reach every block label");

    // Extract the canonical basis from the bottom of the order upwards,
    // splitting coefficients into a bar-symmetric part (lower canonical
    // vectors) and a qZ[q] part (the d-polynomials).
    for (auto lit = labels_.rbegin(); lit != labels_.rend(); ++lit) {
        const Partition& mu = *lit;
        const FockVector& z = echelon.at(mu);
        QRat t(z.terms.at(mu));
        std::map<Partition, QRat> v;
        for (const auto& [la, c] : z.terms) v[la] = QRat(c) / t;
        for (;;) {
            Partition target{};
            bool found = false;
            for (auto it = v.rbegin(); it != v.rend(); ++it) {
                if (it->first == mu || it->second.is_zero()) continue;
                QPoly g = (it->second - it->second.bar()).as_laurent();
                QPoly d;
                for (const auto& [e, c] : g.coeffs())
                    if (e > 0) d = d + QPoly::monomial(e, c);
                QRat r = it->second - QRat(d);
                if (r.is_zero()) continue;  // already pure qZ[q]
                target = it->first;
                // Subtract the bar-symmetric multiple of the lower canonical vector.
                const FockVector& gl = g_.at(target);
                for (const auto& [la, c] : gl.terms) {
                    auto& slot = v[la];
                    slot = slot - r * QRat(c);
                }
                found = true;
                break;
            }
            if (!found) break;
        }
        FockVector g;
        for (const auto& [la, c] : v) {
            if (c.is_zero()) continue;
            QPoly p = c.as_laurent();
            if (la == mu) {
                if (!(p == QPoly(1))) throw std::logic_error("canonical vector is not monic");
            } else if (p.min_exp() < 1) {
                throw std::logic_error("canonical coefficient not in qZ[q]");
            }
            g.add(la, p);
        }
        g_.emplace(mu, std::move(g));
    }
}

const FockVector& FockBlock::G(const Partition& mu) const {
    auto it = g_.find(mu);
    if (it == g_.end()) throw std::invalid_argument("label outside the block");
    return it->second;
}

std::map<Partition, QRat> FockBlock::bar_standard(const Partition& la) const {
    // |λ⟩ = G(λ) - Σ_{ν≠λ} d_{νλ}|ν⟩, so bar|λ⟩ = G(λ) - Σ d̄_{νλ} bar|ν⟩.
    auto cached = bar_cache_.find(la);
    if (cached != bar_cache_.end()) return cached->second;
    std::map<Partition, QRat> out;
    const FockVector& g = G(la);
    for (const auto& [nu, c] : g.terms) {
        auto& slot = out[nu];
        slot = slot + QRat(c);
    }
    for (const auto& [nu, c] : g.terms) {
        if (nu == la) continue;
        std::map<Partition, QRat> lower = bar_standard(nu);
        QRat d_bar(c.bar());
        for (const auto& [ka, v] : lower) {
            auto& slot = out[ka];
            slot = slot - d_bar * v;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    bar_cache_[la] = out;
    return out;
}

namespace {

std::map<std::pair<Partition, int>, FockBlock> block_cache;
std::map<int, CanonicalBasis> basis_cache;
std::mutex fock_mutex;

}  // namespace

const FockBlock& canonical_block(const Partition& core, int weight) {
    std::lock_guard lock(fock_mutex);
    auto key = std::make_pair(core, weight);
    auto it = block_cache.find(key);
    if (it != block_cache.end()) return it->second;
    return block_cache.emplace(key, FockBlock(core, weight)).first->second;
}

CanonicalBasis::CanonicalBasis(int n) : n_(n) {
    for (int c = 0;; ++c) {
        Partition core = c == 0 ? Partition{} : [&] {
            std::vector<int> parts;
            for (int p = c; p >= 1; --p) parts.push_back(p);
            return Partition(std::move(parts));
        }();
        if (core.size() > n) break;
        if ((n - core.size()) % 2) continue;
        const FockBlock& b = canonical_block(core, (n - core.size()) / 2);
        for (const Partition& la : b.labels()) {
            labels_.push_back(la);
            g_[la] = &b.G(la);
        }
    }
    std::sort(labels_.begin(), labels_.end(), std::greater<Partition>());
}

const FockVector& CanonicalBasis::G(const Partition& mu) const {
    auto it = g_.find(mu);
    if (it == g_.end()) throw std::invalid_argument("label outside the grade");
    return *it->second;
}

QPoly CanonicalBasis::d_poly(const Partition& la, const Partition& mu) const {
    const FockVector& g = G(mu);
    auto it = g.terms.find(la);
    return it == g.terms.end() ? QPoly() : it->second;
}

const CanonicalBasis& canonical_basis(int n) {
    {
        std::lock_guard lock(fock_mutex);
        auto it = basis_cache.find(n);
        if (it != basis_cache.end()) return it->second;
    }
    CanonicalBasis b(n);  // builds blocks (locks internally)
    std::lock_guard lock(fock_mutex);
    return basis_cache.emplace(n, std::move(b)).first->second;
}

long long d_check(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size()) throw std::invalid_argument("grade mismatch");
    return canonical_basis(la.size()).d_poly(la, mu).eval_one().get_si();
}

std::map<std::pair<Partition, Partition>, long long> d_check_inverse(int n) {
    const CanonicalBasis& b = canonical_basis(n);
    const auto& labels = b.labels();  // lex-descending: unitriangular order
    size_t m = labels.size();
    std::vector<std::vector<long long>> d(m, std::vector<long long>(m, 0));
    for (size_t j = 0; j < m; ++j)
        for (size_t i = j; i < m; ++i)
            d[i][j] = b.d_poly(labels[i], labels[j]).eval_one().get_si();
    // Lower-unitriangular inverse.
    std::vector<std::vector<long long>> inv(m, std::vector<long long>(m, 0));
    for (size_t j = 0; j < m; ++j) {
        inv[j][j] = 1;
        for (size_t i = j + 1; i < m; ++i) {
            long long acc = 0;
            for (size_t k = j; k < i; ++k) acc += d[i][k] * inv[k][j];
            inv[i][j] = -acc;
        }
    }
    std::map<std::pair<Partition, Partition>, long long> out;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= i; ++j)
            if (inv[i][j]) out[{labels[i], labels[j]}] = inv[i][j];
    return out;
}

long long d_check_inverse_entry(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size()) throw std::invalid_argument("grade mismatch");
    auto inv = d_check_inverse(la.size());
    auto it = inv.find({la, mu});
    return it == inv.end() ? 0 : it->second;
}

}  // namespace barcomb
