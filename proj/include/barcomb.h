#ifndef BARCOMB_H
#define BARCOMB_H

/* C interface to the partition/spin-combinatorics core.  Partitions travel as
 * canonical text: comma-separated parts "9,4,1", empty partition "-".  All
 * char** results are heap-allocated; release them with bc_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    BC_OK = 0,
    BC_ERR_DOMAIN = 1, /* mathematically invalid input */
    BC_ERR_PARSE = 2,  /* malformed text */
    BC_ERR_INTERNAL = 3
} bc_status;

void bc_string_free(char* s);

/* Message for the most recent failure on the calling thread. */
const char* bc_last_error(void);

/* partition core */
bc_status bc_conjugate(const char* la, char** out);

/* hooks and cores */
bc_status bc_core2(const char* la, char** out);
bc_status bc_weight2(const char* la, int* out);
bc_status bc_quot2(const char* la, char** out); /* "q0 | q1" */
bc_status bc_epsstar(const char* la, int* out);
bc_status bc_abacus(const char* la, char** out); /* two-runner diagram, 'b'/'.' */

/* regularisation */
bc_status bc_reg(const char* la, char** out);
bc_status bc_dbl(const char* la, char** out);
bc_status bc_dblreg(const char* la, char** out);
bc_status bc_barcore4(const char* la, char** out);

/* tableaux */
bc_status bc_lr(const char* gamma, const char* alpha, const char* beta, long long* out);
bc_status bc_lr_witness(const char* gamma, const char* alpha, const char* beta, char** out);
bc_status bc_kostka(const char* la, const char* mu, long long* out);

/* symmetric functions */
bc_status bc_schurp(const char* la, int as_json, char** out);
bc_status bc_partial(const char* nu, const char* basis_or_null, const char* element_json,
                     char** out_json);
bc_status bc_mainsym_check(const char* la, const char* gamma, const char* alpha, int as_json,
                           char** out);

/* spin combinatorics */
bc_status bc_spin_branch(const char* la, const char* mu, int i, int a, char** out);
bc_status bc_slopes(const char* la, int as_json, char** out);
bc_status bc_signature(const char* mu, int i, int as_json, char** out);
bc_status bc_noregdown(const char* la, int i, int* exact, int* sufficient);

/* degrees */
bc_status bc_degree(const char* la, char** out);

/* classification */
bc_status bc_classify(const char* la, int as_json, char** out);

/* Rouquier decomposition numbers; the D-matrix handle is opaque. */
typedef struct bc_dmatrix bc_dmatrix;
bc_status bc_dmatrix_load(const char* path, bc_dmatrix** out);
bc_status bc_dmatrix_shipped(int grade, bc_dmatrix** out);
void bc_dmatrix_free(bc_dmatrix* m);
bc_status bc_rouquier_dec(const char* sigma, const char* mu, const char* alpha, const char* beta,
                          const bc_dmatrix* dmat_or_null, char** out);

/* canonical basis matrix in the D-matrix file format (q = 1 unless keep_q) */
bc_status bc_llt(int grade, int keep_q, char** out);

/* named invariant suites; returns a JSON report */
bc_status bc_verify(const char* suite, int bound, unsigned long long seed, char** report_json,
                    int* n_counterexamples);

#ifdef __cplusplus
}
#endif

#endif /* BARCOMB_H */
