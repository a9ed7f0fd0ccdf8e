/* extalg: exact exterior-algebra kernel, C interface.
 *
 * All structured values travel as canonical JSON strings (schemas in the
 * README) or as opaque handles. Rationals are exact "p/q" strings. Every
 * function returns an extalg_status; results come back through out
 * parameters. Strings returned by the library are heap-allocated and must
 * be released with extalg_string_free; handles with the matching *_free.
 *
 * On failure the out parameters are untouched and extalg_last_error()
 * returns a message for the calling thread.
 */

#ifndef EXTALG_H
#define EXTALG_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum extalg_status {
  EXTALG_OK = 0,
  EXTALG_ERR_CHECK_FAILED = 1, /* a check suite found a property violation */
  EXTALG_ERR_PARSE = 2,        /* malformed JSON / rational / index text */
  EXTALG_ERR_SHAPE = 3,        /* dimension, grade or shape mismatch */
  EXTALG_ERR_REFUSED = 4,      /* complexity ceiling (det with n > 10, unforced) */
  EXTALG_ERR_DOMAIN = 5,       /* argument outside an operation's domain */
  EXTALG_ERR_INTERNAL = 6
} extalg_status;

typedef struct extalg_matrix extalg_matrix; /* exact rational matrix */
typedef struct extalg_mvec extalg_mvec;     /* graded multivector (chain over grades) */
typedef struct extalg_tensor extalg_tensor; /* dense order-m tensor */
typedef struct extalg_form extalg_form;     /* differential form, polynomial coefficients */

const char* extalg_version(void);

/* Message for the last failing call on this thread ("" when none). */
const char* extalg_last_error(void);

void extalg_string_free(char* s);

/* --- exact rational scalars ("p/q" strings) --- */

extalg_status extalg_rational_add(const char* a, const char* b, char** out);
extalg_status extalg_rational_mul(const char* a, const char* b, char** out);
extalg_status extalg_rational_neg(const char* a, char** out);
extalg_status extalg_rational_inv(const char* a, char** out);
extalg_status extalg_inverse_factorial(int m, char** out);

/* --- index combinatorics --- */

/* kind is "comb", "inj" or "place". Produces the enumeration listing, one
 * comma-separated 1-based word per line in lexicographic order, followed by
 * a final "count=<N>" line. */
extalg_status extalg_enum_listing(const char* kind, int n, int m, char** out);

/* Sign of a permutation of {1..len} given as 1-based images. */
extalg_status extalg_parity(const int* images, int len, int* out_sign);

extalg_status extalg_rank_combination(int n, const int* word, int len, uint64_t* out_rank);
/* out receives the word as comma-separated text, e.g. "1,3,4". */
extalg_status extalg_unrank_combination(int n, int m, uint64_t rank, char** out);

/* --- matrices --- */

extalg_status extalg_matrix_from_json(const char* json, extalg_matrix** out);
extalg_status extalg_matrix_to_json(const extalg_matrix* m, char** out);
void extalg_matrix_free(extalg_matrix* m);

extalg_status extalg_matrix_mul(const extalg_matrix* a, const extalg_matrix* b,
                                extalg_matrix** out);

/* Leibniz signed sum over injections; refuses n > 10 unless force != 0. */
extalg_status extalg_det_leibniz(const extalg_matrix* a, int force, char** out);
/* Generalized Laplace expansion along the 1-based rowset. */
extalg_status extalg_det_laplace(const extalg_matrix* a, const int* rowset, int rowset_len,
                                 char** out);
extalg_status extalg_cauchy_binet(const extalg_matrix* a, const extalg_matrix* b, char** out);
extalg_status extalg_minor(const extalg_matrix* a, const int* rows, int nrows, const int* cols,
                           int ncols, char** out);
/* Compound matrix of all m x m minors (the exterior-power functor on maps). */
extalg_status extalg_compound(const extalg_matrix* a, int m, extalg_matrix** out);

/* --- multivectors --- */

extalg_status extalg_mvec_from_json(const char* json, extalg_mvec** out);
extalg_status extalg_mvec_to_json(const extalg_mvec* v, char** out);
void extalg_mvec_free(extalg_mvec* v);

extalg_status extalg_wedge(const extalg_mvec* u, const extalg_mvec* v, extalg_mvec** out);
/* Gradewise action of the compound matrices on coordinates. */
extalg_status extalg_apply_map(const extalg_matrix* a, const extalg_mvec* v, extalg_mvec** out);
/* Dual-basis chain pairing; the first argument is the dual element. */
extalg_status extalg_pair(const extalg_mvec* dual, const extalg_mvec* primal, char** out);
/* Interior product by a grade-1 dual element against a homogeneous primal. */
extalg_status extalg_contract(const extalg_mvec* dual, const extalg_mvec* primal,
                              extalg_mvec** out);

/* --- tensors --- */

extalg_status extalg_tensor_from_json(const char* json, extalg_tensor** out);
extalg_status extalg_tensor_to_json(const extalg_tensor* t, char** out);
void extalg_tensor_free(extalg_tensor* t);

extalg_status extalg_tensor_product(const extalg_tensor* s, const extalg_tensor* t,
                                    extalg_tensor** out);
/* Alternation projector (1/m! signed sum over permuted slots). */
extalg_status extalg_tensor_alt(const extalg_tensor* t, extalg_tensor** out);
extalg_status extalg_tensor_is_alternating(const extalg_tensor* t, int* out);
/* Coordinate embedding of a homogeneous multivector; inverse projection. */
extalg_status extalg_mvec_embed(const extalg_mvec* v, extalg_tensor** out);
extalg_status extalg_tensor_project(const extalg_tensor* t, extalg_mvec** out);

/* --- differential forms --- */

extalg_status extalg_form_from_json(const char* json, extalg_form** out);
extalg_status extalg_form_to_json(const extalg_form* f, char** out);
void extalg_form_free(extalg_form* f);

extalg_status extalg_form_wedge(const extalg_form* a, const extalg_form* b, extalg_form** out);
extalg_status extalg_form_d(const extalg_form* a, extalg_form** out);
/* point is comma-separated rationals, one per variable. */
extalg_status extalg_form_evaluate(const extalg_form* a, const char* point, extalg_mvec** out);

/* --- seeded property suites --- */

/* suite is one of functoriality|wedge|alt|laplace|binet|dforms|all.
 * Returns EXTALG_OK with all properties passing, EXTALG_ERR_CHECK_FAILED on
 * a violation; *report is set in both cases and is byte-deterministic for
 * identical arguments. */
extalg_status extalg_run_check(const char* suite, int n, long long trials, uint64_t seed,
                               char** report);

#ifdef __cplusplus
}
#endif

#endif /* EXTALG_H */
