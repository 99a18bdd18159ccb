/* C interface to the minimal-factorization enumeration library.
 *
 * Objects cross the boundary as JSON strings (documented in README.md) or
 * as opaque enumeration handles. Every char** out parameter receives a
 * malloc'd NUL-terminated string owned by the caller; release it with
 * mf_free. On any failure the out parameter is left untouched and
 * mf_last_error() describes the problem (thread-local storage).
 */

#ifndef MINFACT_H
#define MINFACT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mf_status {
    MF_OK = 0,
    MF_EINVAL = 1,   /* invalid argument */
    MF_EPARSE = 2,   /* malformed JSON input */
    MF_EFAIL = 3,    /* a verification check failed (report still produced) */
    MF_EINTERNAL = 4 /* invariant violation inside the library */
} mf_status;

const char* mf_version(void);

/* Message for the most recent failure on this thread. */
const char* mf_last_error(void);

void mf_free(char* s);

/* ---- closed-form polynomials (JSON out) ---- */

/* a: the factorization type (a_1..a_r), each entry >= 2, r = len. */
mf_status mf_type_product_rhs(const int32_t* a, size_t len, char** out_json);
mf_status mf_hook_rhs(int32_t n, char** out_json);
mf_status mf_final_chain_rhs(int32_t n, int32_t k, char** out_json);

/* ---- exhaustive weighted sums (JSON out) ---- */

mf_status mf_wsum_chains(const int32_t* a, size_t len, int32_t threads, char** out_json);
mf_status mf_wsum_andre(int32_t n, char** out_json);
mf_status mf_wsum_cayley(int32_t n, char** out_json);
mf_status mf_wsum_final(int32_t n, int32_t k, char** out_json);

/* Render a polynomial JSON term list as one-line text, e.g. "X1 + 2". */
mf_status mf_poly_text(const char* poly_json, char** out_text);

/* Number of chains of the given type, as a decimal string. */
mf_status mf_count_chains(const int32_t* a, size_t len, char** out_count);

/* ---- enumeration handles ---- */

typedef struct mf_enum mf_enum;

mf_status mf_enum_chains(const int32_t* a, size_t len, mf_enum** out);
mf_status mf_enum_factorizations(const int32_t* a, size_t len, mf_enum** out);
mf_status mf_enum_andre(int32_t n, mf_enum** out);
mf_status mf_enum_cayley(int32_t n, mf_enum** out);
mf_status mf_enum_final(int32_t n, int32_t k, mf_enum** out);

/* 1: *out_json holds the next item; 0: exhausted; negative: -mf_status. */
int mf_enum_next(mf_enum* e, char** out_json);
void mf_enum_close(mf_enum* e);

/* ---- the merge bijection ---- */

/* chain_json: {"a":[...],"n":n,"chain":[...]} with r >= 2 parts.
 * Output: {"case":c,"gamma":chain,"bar":b,"sigma":perm}. */
mf_status mf_psi_apply(const char* chain_json, char** out_json);

/* Reconstructs the unique preimage of (gamma, bar) under type a. */
mf_status mf_psi_invert(const char* gamma_json, int32_t bar, const int32_t* a, size_t len,
                        char** out_chain_json);

/* ---- verification battery ---- */

/* checks: comma-separated family names, or NULL for the full battery.
 * Produces one JSON object per line. Returns MF_EFAIL if any check fails
 * (the report is still written to *out_report). */
mf_status mf_verify_run(const char* checks, int32_t max_n, int32_t threads,
                        char** out_report);
mf_status mf_verify_names(char** out_names_json);

#ifdef __cplusplus
}
#endif

#endif /* MINFACT_H */
