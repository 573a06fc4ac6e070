#ifndef COREQUOT_H
#define COREQUOT_H

/* Generated with cbindgen:0.27.0 */

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum CqStatus {
  CQ_STATUS_OK = 0,
  CQ_STATUS_NULL_POINTER = 1,
  CQ_STATUS_INVALID_UTF8 = 2,
  CQ_STATUS_INVALID_ARGUMENT = 3,
  CQ_STATUS_OVERFLOW = 4,
  CQ_STATUS_PANIC = 5,
} CqStatus;

/**
 * An integer partition.
 */
typedef struct CqPartition CqPartition;

/**
 * A polynomial with exact rational coefficients in t1, t2, ...
 */
typedef struct CqPolynomial CqPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failed call on this thread, or NULL. The
 * pointer stays valid until the next call into this library.
 */
const char *cq_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library.
 */
void cq_string_free(char *s);

/**
 * Parses "4,3,1,1"; the empty string is the empty partition.
 *
 * # Safety
 * `text_in` must be a NUL-terminated string and `out_handle` a valid pointer.
 */
enum CqStatus cq_partition_parse(const char *text_in, struct CqPartition **out_handle);

/**
 * Builds a partition from `len` weakly decreasing parts; trailing zeros are dropped.
 *
 * # Safety
 * `parts` must point to `len` readable values (or be NULL with `len == 0`);
 * `out_handle` must be valid.
 */
enum CqStatus cq_partition_from_parts(const size_t *parts,
                                      size_t len,
                                      struct CqPartition **out_handle);

/**
 * # Safety
 * `p` must be NULL or a handle from this library not yet freed.
 */
void cq_partition_free(struct CqPartition *p);

/**
 * Sum of the parts; 0 for NULL.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
size_t cq_partition_size(const struct CqPartition *p);

/**
 * Number of nonzero parts; 0 for NULL.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
size_t cq_partition_length(const struct CqPartition *p);

/**
 * Copies up to `capacity` parts into `buffer` and stores the full length
 * in `length`. Returns `CQ_STATUS_OVERFLOW` when the buffer was too small.
 *
 * # Safety
 * `buffer` must have room for `capacity` values; `length` must be valid.
 */
enum CqStatus cq_partition_parts(const struct CqPartition *p,
                                 size_t *buffer,
                                 size_t capacity,
                                 size_t *length);

/**
 * # Safety
 * `p` must be a live handle and `out_str` a valid pointer.
 */
enum CqStatus cq_partition_to_string(const struct CqPartition *p, char **out_str);

/**
 * # Safety
 * `p` must be a live handle and `out_handle` a valid pointer.
 */
enum CqStatus cq_partition_conjugate(const struct CqPartition *p, struct CqPartition **out_handle);

/**
 * Splits a partition into its 2-core and the two quotient partitions.
 *
 * # Safety
 * `p` must be a live handle; the three out-pointers must be valid.
 */
enum CqStatus cq_two_quotient(const struct CqPartition *p,
                              struct CqPartition **core,
                              struct CqPartition **quotient0,
                              struct CqPartition **quotient1);

/**
 * Inverse of [`cq_two_quotient`]; fails unless `core` is a staircase.
 *
 * # Safety
 * All handles must be live; `out_handle` must be valid.
 */
enum CqStatus cq_from_triplet(const struct CqPartition *core,
                              const struct CqPartition *quotient0,
                              const struct CqPartition *quotient1,
                              struct CqPartition **out_handle);

/**
 * Stores +1 or -1.
 *
 * # Safety
 * `p` must be a live handle and `sign` a valid pointer.
 */
enum CqStatus cq_two_sign(const struct CqPartition *p, int32_t *sign);

/**
 * The weight Λ_r - nδ carried by the reduced Schur function of `p`.
 *
 * # Safety
 * `p` must be a live handle; `r` and `n` must be valid pointers.
 */
enum CqStatus cq_weight_of(const struct CqPartition *p, size_t *r, size_t *n);

/**
 * Schur function of `p`, or its restriction to odd variables when `reduced`.
 *
 * # Safety
 * `p` must be a live handle and `out_handle` a valid pointer.
 */
enum CqStatus cq_schur(const struct CqPartition *p, bool reduced, struct CqPolynomial **out_handle);

/**
 * Parses the text form, e.g. "1/24*t1^4 + t1*t3".
 *
 * # Safety
 * `text_in` must be a NUL-terminated string and `out_handle` valid.
 */
enum CqStatus cq_polynomial_parse(const char *text_in, struct CqPolynomial **out_handle);

/**
 * # Safety
 * `f` must be NULL or a handle from this library not yet freed.
 */
void cq_polynomial_free(struct CqPolynomial *f);

/**
 * # Safety
 * `f` must be a live handle and `out_str` a valid pointer.
 */
enum CqStatus cq_polynomial_to_string(const struct CqPolynomial *f, char **out_str);

/**
 * JSON term list: [{"exps":{"1":4},"coeff":"1/24"}, ...].
 *
 * # Safety
 * `f` must be a live handle and `out_str` a valid pointer.
 */
enum CqStatus cq_polynomial_to_json(const struct CqPolynomial *f, char **out_str);

/**
 * Applies the vertex operator mode X_k. `f` must not involve even variables.
 *
 * # Safety
 * `f` must be a live handle and `out_handle` a valid pointer.
 */
enum CqStatus cq_vertex_apply(int64_t k,
                              const struct CqPolynomial *f,
                              struct CqPolynomial **out_handle);

/**
 * Littlewood–Richardson coefficient c^outer_{inner, content}.
 *
 * # Safety
 * All handles must be live and `value` a valid pointer.
 */
enum CqStatus cq_lr_coefficient(const struct CqPartition *outer,
                                const struct CqPartition *inner,
                                const struct CqPartition *content,
                                uint64_t *value);

/**
 * Irreducible character of S_N labelled by `shape` at cycle type `cycles`.
 * Returns `CQ_STATUS_OVERFLOW` if the value does not fit in 64 bits.
 *
 * # Safety
 * Both handles must be live and `value` a valid pointer.
 */
enum CqStatus cq_character(const struct CqPartition *shape,
                           const struct CqPartition *cycles,
                           int64_t *value);

/**
 * Rank check for the weight space Λ_r - nδ. `json` may be NULL; otherwise it
 * receives the full report.
 *
 * # Safety
 * `pass` must be valid; `json` must be NULL or valid.
 */
enum CqStatus cq_verify_theorem2(size_t r, size_t n, bool *pass, char **json);

/**
 * Compares the Littlewood–Richardson decomposition of the reduced Schur
 * function of `p` against an exact linear solve. `json` may be NULL.
 *
 * # Safety
 * `p` must be a live handle, `pass` valid, `json` NULL or valid.
 */
enum CqStatus cq_verify_theorem3(const struct CqPartition *p, bool *pass, char **json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COREQUOT_H */
