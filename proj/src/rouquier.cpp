#include "barcomb/rouquier.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include "barcomb/hooks.hpp"
#include "barcomb/regularise.hpp"
#include "barcomb/symfunc.hpp"
#include "barcomb/tableaux.hpp"

namespace barcomb {

RouquierBlock make_rouquier_block(const Partition& sigma, int weight) {
    if (!is_two_core_partition(sigma)) throw std::invalid_argument("σ must be a 2-core");
    if (weight < 0 || weight > sigma.length() + 1)
        throw std::invalid_argument("block is not Rouquier: need w ≤ ℓ(σ)+1");
    return {sigma, weight, core_to_barcore(sigma)};
}

BlockLabels block_labels(const RouquierBlock& b) {
    BlockLabels out;
    for (const Partition& mu : all_partitions(b.weight))
        out.brauer.push_back(plus(b.sigma, scale(2, mu)));
    for (int asize = 0; 2 * asize <= b.weight; ++asize)
        for (const Partition& alpha : all_partitions(asize))
            for (const Partition& beta : strict_partitions(b.weight - 2 * asize))
                out.spin.emplace_back(alpha, beta);
    return out;
}

Partition spin_label_partition(const RouquierBlock& b, const Partition& alpha,
                               const Partition& beta) {
    return sort_union(plus(b.tau, scale(4, alpha)), scale(2, beta));
}

DMatrix::DMatrix(int n, std::map<std::pair<Partition, Partition>, mpz_class> entries)
    : n_(n), e_(std::move(entries)) {
    validate();
}

void DMatrix::validate() const {
    if (n_ < 0) throw std::invalid_argument("negative grade");
    for (const auto& [key, v] : e_) {
        const auto& [la, mu] = key;
        if (la.size() != n_ || mu.size() != n_)
            throw std::invalid_argument("D-matrix entry outside the grade");
        if (v < 0) throw std::invalid_argument("D-matrix entries must be non-negative");
        if (v != 0 && !dominates(mu, la))
            throw std::invalid_argument("D-matrix violates unitriangularity: need μ ⊵ λ");
    }
    for (const Partition& la : all_partitions(n_)) {
        auto it = e_.find({la, la});
        if (it == e_.end() || it->second != 1)
            throw std::invalid_argument("D-matrix diagonal must be 1");
    }
}

mpz_class DMatrix::at(const Partition& la, const Partition& mu) const {
    auto it = e_.find({la, mu});
    return it == e_.end() ? mpz_class(0) : it->second;
}

DMatrix DMatrix::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int n = -1;
    std::map<std::pair<Partition, Partition>, mpz_class> entries;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("n=", 0) == 0) {
            n = std::stoi(line.substr(2));
            continue;
        }
        std::istringstream ls(line);
        std::string la_text, mu_text, val_text;
        if (!std::getline(ls, la_text, '|') || !std::getline(ls, mu_text, '|') ||
            !std::getline(ls, val_text))
            throw std::invalid_argument("malformed D-matrix line: " + line);
        auto strip = [](std::string s) {
            size_t a = s.find_first_not_of(" \t");
            size_t b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        entries[{parse_partition(strip(la_text)), parse_partition(strip(mu_text))}] =
            mpz_class(strip(val_text));
    }
    if (n < 0) throw std::invalid_argument("D-matrix file is missing the n= header");
    return DMatrix(n, std::move(entries));
}

DMatrix DMatrix::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open D-matrix file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string DMatrix::to_text() const {
    std::ostringstream os;
    os << "n=" << n_ << '\n';
    for (const auto& [key, v] : e_) {
        if (v == 0) continue;
        os << barcomb::to_text(key.first) << " | " << barcomb::to_text(key.second) << " | " << v.get_str() << '\n';
    }
    return os.str();
}

namespace {

const char* const kShippedD[5] = {
    "n=0\n- | - | 1\n",
    "n=1\n1 | 1 | 1\n",
    "n=2\n"
    "2 | 2 | 1\n"
    "1,1 | 2 | 1\n"
    "1,1 | 1,1 | 1\n",
    "n=3\n"
    "3 | 3 | 1\n"
    "2,1 | 2,1 | 1\n"
    "1,1,1 | 3 | 1\n"
    "1,1,1 | 1,1,1 | 1\n",
    "n=4\n"
    "4 | 4 | 1\n"
    "3,1 | 4 | 1\n"
    "3,1 | 3,1 | 1\n"
    "2,2 | 3,1 | 1\n"
    "2,2 | 2,2 | 1\n"
    "2,1,1 | 4 | 1\n"
    "2,1,1 | 3,1 | 1\n"
    "2,1,1 | 2,2 | 1\n"
    "2,1,1 | 2,1,1 | 1\n"
    "1,1,1,1 | 4 | 1\n"
    "1,1,1,1 | 2,2 | 1\n"
    "1,1,1,1 | 2,1,1 | 1\n"
    "1,1,1,1 | 1,1,1,1 | 1\n",
};

}  // namespace

const DMatrix& DMatrix::shipped(int grade) {
    static std::map<int, DMatrix> cache;
    static std::mutex m;
    std::lock_guard lock(m);
    auto it = cache.find(grade);
    if (it != cache.end()) return it->second;
    if (grade < 0 || grade > 4)
        throw std::invalid_argument("no shipped D-matrix for this grade; pass a file");
    return cache.emplace(grade, parse(kShippedD[grade])).first->second;
}

SqrtTwoScalar omega_spin_coeff(const RouquierBlock& b, const Partition& mu,
                               const Partition& alpha, const Partition& beta) {
    if (!beta.is_strict()) throw std::invalid_argument("β must be strict");
    int w = 2 * alpha.size() + beta.size();
    if (w != b.weight || mu.size() != w)
        throw std::invalid_argument("grade mismatch between labels and block weight");
    mpz_class total = 0;
    int gsize = mu.size() - beta.size();
    if (gsize >= 0 && gsize % 2 == 0) {
        for (const Partition& gamma : all_partitions(gsize)) {
            int eps = eps_star(gamma);
            if (!eps) continue;
            auto [g0, g1] = two_quotient(gamma);
            long long aa = lr_coeff(alpha, g0, g1);
            if (!aa) continue;
            for (const Partition& zeta : all_partitions(beta.size())) {
                mpq_class pz = p_schur_coeff(beta, zeta);
                if (pz == 0) continue;
                long long am = lr_coeff(mu, gamma, zeta);
                if (!am) continue;
                mpq_class term = pz * mpq_class(eps) * mpq_class(static_cast<long>(aa * am));
                if (term.get_den() != 1) throw std::logic_error("non-integer ω coefficient");
                total += term.get_num();
            }
        }
    }
    return SqrtTwoScalar::pow2_half(beta.length(), total);
}

SqrtTwoScalar rouq_spin_decomposition(const RouquierBlock& b, const Partition& mu,
                                      const Partition& alpha, const Partition& beta,
                                      const DMatrix& d) {
    if (d.grade() != b.weight) throw std::invalid_argument("D-matrix grade must equal the weight");
    SqrtTwoScalar total;
    for (const Partition& la : all_partitions(b.weight)) {
        mpz_class m = d.at(la, mu);
        if (m == 0) continue;
        total += omega_spin_coeff(b, la, alpha, beta) * SqrtTwoScalar::integer(m);
    }
    return total;
}

std::map<Partition, long long> ffd_bullet_omega(const RouquierBlock& b, const Partition& la,
                                                int a) {
    if (la.size() + a > b.sigma.length() + 1)
        throw std::invalid_argument("induction leaves the Rouquier range");
    std::vector<int> col(a, 1);
    Partition ones(std::move(col));
    std::map<Partition, long long> out;
    for (const Partition& mu : all_partitions(la.size() + a)) {
        long long c = lr_coeff(mu, la, ones);
        if (c) out[mu] = c;
    }
    return out;
}

SqrtTwoScalar ffd_bullet_spin(const RouquierBlock& b, const Partition& alpha,
                              const Partition& beta, const Partition& gamma,
                              const Partition& zeta) {
    int w_lo = 2 * alpha.size() + beta.size();
    int w_hi = 2 * gamma.size() + zeta.size();
    if (w_lo > w_hi || w_hi > b.sigma.length() + 1)
        throw std::invalid_argument("labels violate the Rouquier bounds");
    long long h = hs_strip(zeta, beta);
    long long v = lrcb(gamma, alpha);
    if (!h || !v) return SqrtTwoScalar::integer(0);
    return SqrtTwoScalar::pow2_half(zeta.length() - beta.length(), mpz_class(static_cast<long>(h * v)));
}

}  // namespace barcomb
