// Command-line front end for the barcomb shared library.  Every subcommand is
// a thin wrapper over one C-API call; partitions are written "a,b,c" with "-"
// for the empty partition.

#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "barcomb.h"

namespace {

int g_exit = 0;
bool g_json = false;

void emit_error(bc_status st) {
    if (g_json)
        std::printf("{\"error\":\"%s\",\"code\":%d}\n", bc_last_error(), static_cast<int>(st));
    else
        std::fprintf(stderr, "error: %s\n", bc_last_error());
    g_exit = (st == BC_ERR_PARSE) ? 2 : 1;
}

void print_owned(bc_status st, char* s) {
    if (st != BC_OK) {
        emit_error(st);
        return;
    }
    std::printf("%s\n", s);
    bc_string_free(s);
}

// For the simple partition→partition commands a JSON body is just the result
// in the array form.
void print_partition_result(bc_status st, char* s) {
    if (st != BC_OK) {
        emit_error(st);
        return;
    }
    if (!g_json) {
        std::printf("%s\n", s);
    } else {
        std::string text(s);
        std::printf("[");
        if (text != "-") {
            for (size_t i = 0; i < text.size(); ++i) std::putchar(text[i] == ',' ? ',' : text[i]);
        }
        std::printf("]\n");
    }
    bc_string_free(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition, spin-branching and decomposition-number calculator"};
    app.require_subcommand(1);
    unsigned long long seed = 20200734ULL;
    app.add_flag("--json", g_json, "emit JSON instead of text");
    app.add_option("--seed", seed, "seed for randomized verification suites");

    std::string arg1, arg2, arg3, arg4;
    bool flag_abacus = false, flag_witness = false, flag_q = false;

    auto one_partition = [&](const char* name, const char* desc) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option("partition", arg1, "partition, e.g. 9,4,1")->required();
        return c;
    };

    CLI::App* c_core2 = one_partition("core2", "2-core of a partition");
    c_core2->add_flag("--abacus", flag_abacus, "also print the abacus display");
    CLI::App* c_quot2 = one_partition("quot2", "2-quotient of a partition");
    c_quot2->add_flag("--abacus", flag_abacus, "also print the abacus display");
    CLI::App* c_eps = one_partition("epsstar", "sign from horizontal domino removals");
    c_eps->add_flag("--abacus", flag_abacus, "also print the abacus display");
    one_partition("conj", "conjugate partition");
    one_partition("reg", "2-regularisation");
    one_partition("dbl", "double of a strict partition");
    one_partition("dblreg", "regularised double");
    one_partition("barcore4", "4-bar-core of a strict partition");
    one_partition("degree", "bar-length degree of the spin character");
    one_partition("schurp", "Schur P-function in the Schur basis");
    CLI::App* c_classify = one_partition("classify", "irreducibility of the alternating double-cover spin character");
    (void)c_classify;

    CLI::App* c_lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    c_lr->add_option("gamma", arg1)->required();
    c_lr->add_option("alpha", arg2)->required();
    c_lr->add_option("beta", arg3)->required();
    c_lr->add_flag("--witness", flag_witness, "print one LR tableau");

    CLI::App* c_kostka = app.add_subcommand("kostka", "Kostka number");
    c_kostka->add_option("lambda", arg1)->required();
    c_kostka->add_option("mu", arg2, "type composition")->required();

    CLI::App* c_partial = app.add_subcommand("partial", "reduction operator on an element file");
    c_partial->add_option("nu", arg1)->required();
    c_partial->add_option("basis", arg2, "basis of the element (m, s or P)")->required();
    c_partial->add_option("element-file", arg3, "JSON element file")->required();

    CLI::App* c_mainsym = app.add_subcommand("mainsym-check", "evaluate both sides of the main identity");
    c_mainsym->add_option("lambda", arg1)->required();
    c_mainsym->add_option("gamma", arg2)->required();
    c_mainsym->add_option("alpha", arg3)->required();

    CLI::App* c_branch = app.add_subcommand("spin-branch", "spin branching coefficient");
    int opt_i = 0, opt_a = 1;
    c_branch->add_option("lambda", arg1)->required();
    c_branch->add_option("mu", arg2)->required();
    c_branch->add_option("i", opt_i)->required();
    c_branch->add_option("a", opt_a)->required();

    CLI::App* c_slopes = one_partition("slopes", "per-slope node counts");

    CLI::App* c_sig = app.add_subcommand("signature", "i-signature with normal/conormal nodes");
    c_sig->add_option("mu", arg1)->required();
    c_sig->add_option("i", opt_i)->required();

    CLI::App* c_noreg = app.add_subcommand("noregdown", "restriction-defect test");
    c_noreg->add_option("lambda", arg1)->required();
    c_noreg->add_option("i", opt_i)->required();

    CLI::App* c_rouq = app.add_subcommand("rouquier-dec", "Rouquier-block spin decomposition number");
    std::string opt_sigma, opt_mu, opt_alpha, opt_beta, opt_dmat;
    c_rouq->add_option("--sigma", opt_sigma, "2-core of the block")->required();
    c_rouq->add_option("--mu", opt_mu, "Brauer label is σ+2μ")->required();
    c_rouq->add_option("--alpha", opt_alpha, "spin label part α")->required();
    c_rouq->add_option("--beta", opt_beta, "spin label part β")->required();
    c_rouq->add_option("--dmat", opt_dmat, "decomposition matrix file (defaults to the shipped one)");

    CLI::App* c_llt = app.add_subcommand("llt", "canonical-basis decomposition matrix");
    int opt_n = 0;
    c_llt->add_option("--n", opt_n, "grade")->required();
    c_llt->add_flag("--q", flag_q, "print q-polynomials instead of q=1 values");

    CLI::App* c_verify = app.add_subcommand("verify", "run a named invariant suite");
    int opt_bound = 8;
    c_verify->add_option("suite", arg1)->required();
    c_verify->add_option("bound", opt_bound, "size bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    char* s = nullptr;
    if (app.got_subcommand("conj")) {
        print_partition_result(bc_conjugate(arg1.c_str(), &s), s);
    } else if (app.got_subcommand(c_core2)) {
        if (flag_abacus && bc_abacus(arg1.c_str(), &s) == BC_OK) {
            std::printf("%s\n", s);
            bc_string_free(s);
        }
        print_partition_result(bc_core2(arg1.c_str(), &s), s);
    } else if (app.got_subcommand(c_quot2)) {
        if (flag_abacus && bc_abacus(arg1.c_str(), &s) == BC_OK) {
            std::printf("%s\n", s);
            bc_string_free(s);
        }
        bc_status st = bc_quot2(arg1.c_str(), &s);
        if (st != BC_OK) {
            emit_error(st);
        } else if (g_json) {
            std::string text(s);
            size_t bar = text.find(" | ");
            auto arr = [](const std::string& t) {
                return t == "-" ? std::string() : t;
            };
            std::printf("{\"q0\":[%s],\"q1\":[%s]}\n", arr(text.substr(0, bar)).c_str(),
                        arr(text.substr(bar + 3)).c_str());
            bc_string_free(s);
        } else {
            print_owned(st, s);
        }
    } else if (app.got_subcommand(c_eps)) {
        if (flag_abacus && bc_abacus(arg1.c_str(), &s) == BC_OK) {
            std::printf("%s\n", s);
            bc_string_free(s);
        }
        int v = 0;
        bc_status st = bc_epsstar(arg1.c_str(), &v);
        if (st != BC_OK) emit_error(st);
        else std::printf(g_json ? "{\"epsstar\":%d}\n" : "%d\n", v);
    } else if (app.got_subcommand("reg")) {
        print_partition_result(bc_reg(arg1.c_str(), &s), s);
    } else if (app.got_subcommand("dbl")) {
        print_partition_result(bc_dbl(arg1.c_str(), &s), s);
    } else if (app.got_subcommand("dblreg")) {
        print_partition_result(bc_dblreg(arg1.c_str(), &s), s);
    } else if (app.got_subcommand("barcore4")) {
        print_partition_result(bc_barcore4(arg1.c_str(), &s), s);
    } else if (app.got_subcommand("degree")) {
        bc_status st = bc_degree(arg1.c_str(), &s);
        if (st != BC_OK) emit_error(st);
        else if (g_json) {
            std::printf("{\"degree\":\"%s\"}\n", s);
            bc_string_free(s);
        } else {
            print_owned(st, s);
        }
    } else if (app.got_subcommand("schurp")) {
        print_owned(bc_schurp(arg1.c_str(), g_json ? 1 : 0, &s), s);
    } else if (app.got_subcommand("classify")) {
        print_owned(bc_classify(arg1.c_str(), g_json ? 1 : 0, &s), s);
    } else if (app.got_subcommand(c_lr)) {
        if (flag_witness) {
            print_owned(bc_lr_witness(arg1.c_str(), arg2.c_str(), arg3.c_str(), &s), s);
        } else {
            long long v = 0;
            bc_status st = bc_lr(arg1.c_str(), arg2.c_str(), arg3.c_str(), &v);
            if (st != BC_OK) emit_error(st);
            else std::printf(g_json ? "{\"lr\":%lld}\n" : "%lld\n", v);
        }
    } else if (app.got_subcommand(c_kostka)) {
        long long v = 0;
        bc_status st = bc_kostka(arg1.c_str(), arg2.c_str(), &v);
        if (st != BC_OK) emit_error(st);
        else std::printf(g_json ? "{\"kostka\":%lld}\n" : "%lld\n", v);
    } else if (app.got_subcommand(c_partial)) {
        std::FILE* f = std::fopen(arg3.c_str(), "rb");
        if (!f) {
            std::fprintf(stderr, "error: cannot open %s\n", arg3.c_str());
            return 2;
        }
        std::string body;
        char buf[4096];
        size_t got;
        while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) body.append(buf, got);
        std::fclose(f);
        print_owned(bc_partial(arg1.c_str(), arg2.c_str(), body.c_str(), &s), s);
    } else if (app.got_subcommand(c_mainsym)) {
        print_owned(
            bc_mainsym_check(arg1.c_str(), arg2.c_str(), arg3.c_str(), g_json ? 1 : 0, &s), s);
    } else if (app.got_subcommand(c_branch)) {
        bc_status st = bc_spin_branch(arg1.c_str(), arg2.c_str(), opt_i, opt_a, &s);
        if (st != BC_OK) emit_error(st);
        else if (g_json) {
            std::printf("{\"coefficient\":\"%s\"}\n", s);
            bc_string_free(s);
        } else {
            print_owned(st, s);
        }
    } else if (app.got_subcommand(c_slopes)) {
        print_owned(bc_slopes(arg1.c_str(), g_json ? 1 : 0, &s), s);
    } else if (app.got_subcommand(c_sig)) {
        print_owned(bc_signature(arg1.c_str(), opt_i, g_json ? 1 : 0, &s), s);
    } else if (app.got_subcommand(c_noreg)) {
        int exact = 0, sufficient = 0;
        bc_status st = bc_noregdown(arg1.c_str(), opt_i, &exact, &sufficient);
        if (st != BC_OK) emit_error(st);
        else std::printf(g_json ? "{\"noregdown\":%s,\"sufficient\":%s}\n" : "noregdown=%s sufficient=%s\n",
                         exact ? "true" : "false", sufficient ? "true" : "false");
    } else if (app.got_subcommand(c_rouq)) {
        bc_dmatrix* dm = nullptr;
        if (!opt_dmat.empty()) {
            bc_status st = bc_dmatrix_load(opt_dmat.c_str(), &dm);
            if (st != BC_OK) {
                emit_error(st);
                return g_exit;
            }
        }
        bc_status st = bc_rouquier_dec(opt_sigma.c_str(), opt_mu.c_str(), opt_alpha.c_str(),
                                       opt_beta.c_str(), dm, &s);
        bc_dmatrix_free(dm);
        if (st != BC_OK) emit_error(st);
        else if (g_json) {
            std::printf("{\"value\":\"%s\"}\n", s);
            bc_string_free(s);
        } else {
            print_owned(st, s);
        }
    } else if (app.got_subcommand(c_llt)) {
        print_owned(bc_llt(opt_n, flag_q ? 1 : 0, &s), s);
    } else if (app.got_subcommand(c_verify)) {
        int bad = 0;
        bc_status st = bc_verify(arg1.c_str(), opt_bound, seed, &s, &bad);
        if (st != BC_OK) {
            emit_error(st);
            // unknown suite is a usage error
            if (st == BC_ERR_DOMAIN) g_exit = 2;
        } else {
            std::printf("%s\n", s);
            bc_string_free(s);
            if (bad > 0) g_exit = 1;
        }
    }
    return g_exit;
}
