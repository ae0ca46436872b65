#include "barcomb.h"

#include <cstring>
#include <sstream>
#include <string>

#include <json.hpp>

#include "barcomb/classify.hpp"
#include "barcomb/degrees.hpp"
#include "barcomb/hooks.hpp"
#include "barcomb/llt.hpp"
#include "barcomb/regularise.hpp"
#include "barcomb/rouquier.hpp"
#include "barcomb/spin.hpp"
#include "barcomb/symfunc.hpp"
#include "barcomb/tableaux.hpp"
#include "barcomb/verify.hpp"

using nlohmann::json;

namespace {

thread_local std::string g_last_error;

// Parse failures raise this so they map to BC_ERR_PARSE instead of
// BC_ERR_DOMAIN.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

barcomb::Partition parse_arg(const char* text) {
    if (!text) throw ParseError("null partition argument");
    try {
        return barcomb::parse_partition(text);
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
bc_status guarded(Fn&& fn) {
    try {
        fn();
        return BC_OK;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return BC_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return BC_ERR_DOMAIN;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return BC_ERR_DOMAIN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BC_ERR_INTERNAL;
    }
}

json node_list(const std::set<barcomb::Node>& nodes) {
    json out = json::array();
    for (barcomb::Node n : nodes) out.push_back({n.row, n.col});
    return out;
}

std::string nodes_text(const std::set<barcomb::Node>& nodes) {
    std::ostringstream os;
    bool first = true;
    for (barcomb::Node n : nodes) {
        if (!first) os << ' ';
        first = false;
        os << '(' << n.row << ',' << n.col << ')';
    }
    return os.str();
}

}  // namespace

extern "C" {

void bc_string_free(char* s) { std::free(s); }

const char* bc_last_error(void) { return g_last_error.c_str(); }

bc_status bc_conjugate(const char* la, char** out) {
    return guarded([&] { *out = dup_string(to_text(barcomb::conjugate(parse_arg(la)))); });
}

bc_status bc_core2(const char* la, char** out) {
    return guarded([&] { *out = dup_string(to_text(barcomb::two_core(parse_arg(la)))); });
}

bc_status bc_weight2(const char* la, int* out) {
    return guarded([&] { *out = barcomb::two_weight(parse_arg(la)); });
}

bc_status bc_quot2(const char* la, char** out) {
    return guarded([&] {
        auto [q0, q1] = barcomb::two_quotient(parse_arg(la));
        *out = dup_string(to_text(q0) + " | " + to_text(q1));
    });
}

bc_status bc_epsstar(const char* la, int* out) {
    return guarded([&] { *out = barcomb::eps_star(parse_arg(la)); });
}

bc_status bc_abacus(const char* la, char** out) {
    return guarded(
        [&] { *out = dup_string(barcomb::AbacusDisplay::of(parse_arg(la)).render()); });
}

bc_status bc_reg(const char* la, char** out) {
    return guarded([&] { *out = dup_string(to_text(barcomb::regularise(parse_arg(la)))); });
}

bc_status bc_dbl(const char* la, char** out) {
    return guarded([&] { *out = dup_string(to_text(barcomb::double_partition(parse_arg(la)))); });
}

bc_status bc_dblreg(const char* la, char** out) {
    return guarded([&] { *out = dup_string(to_text(barcomb::dblreg(parse_arg(la)))); });
}

bc_status bc_barcore4(const char* la, char** out) {
    return guarded([&] { *out = dup_string(to_text(barcomb::four_bar_core(parse_arg(la)))); });
}

bc_status bc_lr(const char* gamma, const char* alpha, const char* beta, long long* out) {
    return guarded(
        [&] { *out = barcomb::lr_coeff(parse_arg(gamma), parse_arg(alpha), parse_arg(beta)); });
}

bc_status bc_lr_witness(const char* gamma, const char* alpha, const char* beta, char** out) {
    return guarded([&] {
        auto w = barcomb::lr_witness(parse_arg(gamma), parse_arg(alpha), parse_arg(beta));
        if (!w) throw std::domain_error("no Littlewood-Richardson tableau exists");
        *out = dup_string(w->render());
    });
}

bc_status bc_kostka(const char* la, const char* mu, long long* out) {
    return guarded([&] {
        barcomb::Partition shape = parse_arg(la);
        // The type may be an arbitrary composition, e.g. "1,2,1".
        std::vector<int> type;
        std::string text(mu ? mu : "");
        if (text != "-" && !text.empty()) {
            std::istringstream is(text);
            std::string tok;
            while (std::getline(is, tok, ',')) {
                try {
                    type.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw ParseError("malformed composition text: " + text);
                }
            }
        }
        *out = barcomb::kostka(shape, type);
    });
}

bc_status bc_schurp(const char* la, int as_json, char** out) {
    return guarded([&] {
        const barcomb::SymElement& p = barcomb::schur_p_in_schur(parse_arg(la));
        *out = dup_string(as_json ? p.to_json() : p.to_string());
    });
}

bc_status bc_partial(const char* nu, const char* basis_or_null, const char* element_json,
                     char** out_json) {
    return guarded([&] {
        barcomb::SymElement f = barcomb::SymElement::from_json(element_json ? element_json : "");
        if (basis_or_null && *basis_or_null &&
            barcomb::basis_from_name(basis_or_null) != f.basis())
            throw std::invalid_argument("element file basis does not match the argument");
        *out_json = dup_string(barcomb::partial(parse_arg(nu), f).to_json());
    });
}

bc_status bc_mainsym_check(const char* la, const char* gamma, const char* alpha, int as_json,
                           char** out) {
    return guarded([&] {
        auto [lhs, rhs] =
            barcomb::check_mainsym(parse_arg(la), parse_arg(gamma), parse_arg(alpha));
        if (as_json) {
            json j;
            j["lhs"] = lhs.get_str();
            j["rhs"] = rhs.get_str();
            j["equal"] = (lhs == rhs);
            *out = dup_string(j.dump());
        } else {
            std::ostringstream os;
            os << "lhs=" << lhs.get_str() << " rhs=" << rhs.get_str()
               << " equal=" << (lhs == rhs ? "true" : "false");
            *out = dup_string(os.str());
        }
    });
}

bc_status bc_spin_branch(const char* la, const char* mu, int i, int a, char** out) {
    return guarded([&] {
        *out = dup_string(
            barcomb::spin_branch_coeff(parse_arg(la), parse_arg(mu), i, a).to_string());
    });
}

bc_status bc_slopes(const char* la, int as_json, char** out) {
    return guarded([&] {
        barcomb::Partition p = parse_arg(la);
        int max_l = 2 * (p.length() + 1) + p.at(1) / 2 + 2;
        json rows = json::array();
        std::ostringstream os;
        for (int l = 0; l <= max_l; ++l) {
            long long s = barcomb::slp(p, l), a = barcomb::aslp(p, l), r = barcomb::rslp(p, l),
                      z = barcomb::zslp(p, l);
            if (!s && !a && !r && !z) continue;
            rows.push_back({{"slope", l}, {"slp", s}, {"aslp", a}, {"rslp", r}, {"zslp", z}});
            os << l << ": slp=" << s << " aslp=" << a << " rslp=" << r << " zslp=" << z << '\n';
        }
        *out = dup_string(as_json ? rows.dump() : os.str());
    });
}

bc_status bc_signature(const char* mu, int i, int as_json, char** out) {
    return guarded([&] {
        barcomb::Signature sig = barcomb::i_signature(parse_arg(mu), i);
        if (as_json) {
            json j;
            j["signature"] = sig.seq.signs;
            j["reduced"] = barcomb::reduce_signs(sig.seq).signs;
            j["normal"] = node_list(sig.normal);
            j["conormal"] = node_list(sig.conormal);
            *out = dup_string(j.dump());
        } else {
            std::ostringstream os;
            os << "signature=" << (sig.seq.signs.empty() ? "(empty)" : sig.seq.signs)
               << " normal=[" << nodes_text(sig.normal) << "]"
               << " conormal=[" << nodes_text(sig.conormal) << "]";
            *out = dup_string(os.str());
        }
    });
}

bc_status bc_noregdown(const char* la, int i, int* exact, int* sufficient) {
    return guarded([&] {
        barcomb::Partition p = parse_arg(la);
        *exact = barcomb::noregdown(p, i) ? 1 : 0;
        *sufficient = barcomb::noregdown_sufficient(p, i) ? 1 : 0;
    });
}

bc_status bc_degree(const char* la, char** out) {
    return guarded([&] { *out = dup_string(barcomb::spin_degree(parse_arg(la)).to_string()); });
}

bc_status bc_classify(const char* la, int as_json, char** out) {
    return guarded([&] {
        barcomb::Classification c = barcomb::classify_alt_spin(parse_arg(la));
        const char* verdict = c.verdict == barcomb::Verdict::irreducible ? "irreducible" : "reducible";
        if (as_json) {
            json j;
            j["verdict"] = verdict;
            j["reason"] = c.reason;
            if (c.decomposition) {
                j["decomposition"] = {{"tau", c.decomposition->tau.parts()},
                                      {"alpha", c.decomposition->alpha.parts()},
                                      {"beta", c.decomposition->beta.parts()}};
            }
            *out = dup_string(j.dump());
        } else {
            std::string text = std::string(verdict) + " (" + c.reason + ")";
            *out = dup_string(text);
        }
    });
}

struct bc_dmatrix {
    barcomb::DMatrix m;
};

bc_status bc_dmatrix_load(const char* path, bc_dmatrix** out) {
    return guarded([&] {
        *out = new bc_dmatrix{barcomb::DMatrix::load_file(path ? path : "")};
    });
}

bc_status bc_dmatrix_shipped(int grade, bc_dmatrix** out) {
    return guarded([&] { *out = new bc_dmatrix{barcomb::DMatrix::shipped(grade)}; });
}

void bc_dmatrix_free(bc_dmatrix* m) { delete m; }

bc_status bc_rouquier_dec(const char* sigma, const char* mu, const char* alpha, const char* beta,
                          const bc_dmatrix* dmat_or_null, char** out) {
    return guarded([&] {
        barcomb::Partition s = parse_arg(sigma), m = parse_arg(mu), a = parse_arg(alpha),
                           b = parse_arg(beta);
        int w = 2 * a.size() + b.size();
        barcomb::RouquierBlock block = barcomb::make_rouquier_block(s, w);
        const barcomb::DMatrix& d =
            dmat_or_null ? dmat_or_null->m : barcomb::DMatrix::shipped(w);
        *out = dup_string(barcomb::rouq_spin_decomposition(block, m, a, b, d).to_string());
    });
}

bc_status bc_llt(int grade, int keep_q, char** out) {
    return guarded([&] {
        if (grade < 0) throw std::invalid_argument("grade must be non-negative");
        const barcomb::CanonicalBasis& b = barcomb::canonical_basis(grade);
        std::ostringstream os;
        os << "n=" << grade << '\n';
        for (const barcomb::Partition& mu : b.labels())
            for (const barcomb::Partition& la : b.labels()) {
                barcomb::QPoly p = b.d_poly(la, mu);
                if (p.is_zero()) continue;
                os << to_text(la) << " | " << to_text(mu) << " | "
                   << (keep_q ? p.to_string() : p.eval_one().get_str()) << '\n';
            }
        *out = dup_string(os.str());
    });
}

bc_status bc_verify(const char* suite, int bound, unsigned long long seed, char** report_json,
                    int* n_counterexamples) {
    return guarded([&] {
        barcomb::VerifyReport r = barcomb::run_verify_suite(suite ? suite : "", bound, seed);
        json j;
        j["suite"] = r.suite;
        j["checked"] = r.checked;
        j["counterexamples"] = r.counterexamples;
        *report_json = dup_string(j.dump());
        *n_counterexamples = static_cast<int>(r.counterexamples.size());
    });
}

}  // extern "C"
