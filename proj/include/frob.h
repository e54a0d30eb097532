/* SPDX-License-Identifier: Apache-2.0
 * Copyright (c) 2026 frobctl developers
 *
 * C interface to the frob library.  All computational entry points return a
 * status code and hand results back as heap-allocated strings that the
 * caller releases with frob_string_free.
 */

#ifndef FROB_H
#define FROB_H

#ifdef __cplusplus
extern "C" {
#endif

#define FROB_OK 0        /* success */
#define FROB_EVERIFY 1   /* an asserted equality failed; output still emitted */
#define FROB_EUSAGE 2    /* invalid arguments or configuration */
#define FROB_ERESOURCE 3 /* a resource cap was exceeded */
#define FROB_EINTERNAL 4 /* unexpected internal failure */

typedef struct frob_ctx frob_ctx;

/* type_label is a combined Cartan label such as "A2", "G2".  Returns NULL on
 * an invalid label; consult frob_last_error. */
frob_ctx* frob_ctx_create(const char* type_label);
void frob_ctx_destroy(frob_ctx* ctx);

/* dir = NULL or "" disables the on-disk character cache. */
int frob_ctx_set_cache_dir(frob_ctx* ctx, const char* dir);
int frob_ctx_set_path_cap(frob_ctx* ctx, long cap);
int frob_ctx_set_jobs(frob_ctx* ctx, int jobs);

/* Character dump as JSON.  kind: "weyl" (lambda), "euler" (lambda),
 * "steinberg" (p, r), "hatnabla" (p, r, lambda).  lambda is an array of
 * rank-many fundamental-weight coordinates; pass NULL when unused. */
int frob_char_json(frob_ctx* ctx, const char* kind, int p, int r, const int* lambda, int len,
                   char** out);

/* Good-filtration multiplicity table of the Frobenius contraction of
 * nabla(lambda); csv != 0 selects CSV, otherwise JSON. */
int frob_contract(frob_ctx* ctx, int p, const int* lambda, int len, int csv, char** out);

/* Signed Weyl-orbit sum for dominant lambda, mu; *out is a decimal string. */
int frob_signed_sum(frob_ctx* ctx, int p, const int* lambda, const int* mu, int len, char** out);

/* Count of (p-1)rho-dominant paths of shape lambda ending at p*mu. */
int frob_ls_count(frob_ctx* ctx, int p, const int* lambda, const int* mu, int len, char** out);

/* Grid suites; each returns FROB_EVERIFY when a checked identity fails and
 * still writes the full JSON report. */
int frob_agree(frob_ctx* ctx, int p, int max_coord, char** out);
int frob_adjoint(frob_ctx* ctx, int p, int max_coord, char** out);
int frob_bound(frob_ctx* ctx, int p, char** out);
int frob_hatnabla(frob_ctx* ctx, int p, int r, int s, int min_coord, int max_coord, char** out);

/* SL2 oracle suite (ctx may be NULL; the suite is rank-1 only). */
int frob_oracle(frob_ctx* ctx, int p, int max_n, int max_sum, char** out);

/* Last error message for the calling thread; empty string when none. */
const char* frob_last_error(void);
void frob_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
