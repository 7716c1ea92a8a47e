/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef TRIARRAY_H
#define TRIARRAY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum TriStatus {
  TriStatus_Ok = 0,
  TriStatus_NullPointer = 1,
  TriStatus_InvalidUtf8 = 2,
  TriStatus_Parse = 3,
  TriStatus_Shape = 4,
  TriStatus_LadderViolation = 5,
  TriStatus_NegativeEntry = 6,
  TriStatus_DimMismatch = 7,
  TriStatus_OutOfRange = 8,
  TriStatus_Undefined = 9,
  TriStatus_BufferTooSmall = 10,
  TriStatus_Internal = 11,
  TriStatus_Panic = 12,
} TriStatus;

typedef enum TriOrderMethod {
  TriOrderMethod_Chutewise = 0,
  TriOrderMethod_Segments = 1,
  TriOrderMethod_Coweights = 2,
} TriOrderMethod;

typedef enum TriComparison {
  TriComparison_Less = 0,
  TriComparison_Equal = 1,
  TriComparison_Greater = 2,
  TriComparison_Incomparable = 3,
} TriComparison;

/**
 * The closure order on all arrays of one dimension vector.
 */
typedef struct TriPoset TriPoset;

/**
 * A triangular array.
 */
typedef struct TriTriangle TriTriangle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Description of the last failure on this thread; empty after a success.
 * Valid until the next call into the library on this thread.
 */
const char *tri_last_error_message(void);

/**
 * Static name of a status code.
 */
const char *tri_status_name(enum TriStatus status);

void tri_string_free(char *s);

/**
 * Parses the text form, e.g. `"0,1,2/1,2/3"`.
 */
enum TriStatus tri_triangle_parse(const char *text, struct TriTriangle **out);

/**
 * Parses `{"n": 3, "chutes": [[0,1,2],[1,2],[3]]}`.
 */
enum TriStatus tri_triangle_from_json(const char *json, struct TriTriangle **out);

enum TriStatus tri_triangle_clone(const struct TriTriangle *t, struct TriTriangle **out);

void tri_triangle_free(struct TriTriangle *t);

enum TriStatus tri_triangle_to_string(const struct TriTriangle *t, char **out);

enum TriStatus tri_triangle_to_json(const struct TriTriangle *t, char **out);

enum TriStatus tri_triangle_size(const struct TriTriangle *t, uintptr_t *out);

/**
 * Entry `y_{ij}`, 1-based.
 */
enum TriStatus tri_triangle_get(const struct TriTriangle *t,
                                uintptr_t i,
                                uintptr_t j,
                                uint32_t *out);

/**
 * Writes the chute sums into `out[0..n]`; `capacity` must be at least `n`.
 */
enum TriStatus tri_triangle_dim_vector(const struct TriTriangle *t,
                                       uint32_t *out,
                                       uintptr_t capacity);

enum TriStatus tri_orbit_dim(const struct TriTriangle *t, uint64_t *out);

enum TriStatus tri_flag_dim(const struct TriTriangle *t, uint64_t *out);

enum TriStatus tri_fiber_dim(const struct TriTriangle *t, uint64_t *out);

/**
 * The combinatorial Fourier transform `T`.
 */
enum TriStatus tri_transform(const struct TriTriangle *t, struct TriTriangle **out);

/**
 * The inverse transform `T'`.
 */
enum TriStatus tri_inverse_transform(const struct TriTriangle *t, struct TriTriangle **out);

enum TriStatus tri_compare(const struct TriTriangle *left,
                           const struct TriTriangle *right,
                           enum TriOrderMethod method,
                           enum TriComparison *out);

/**
 * Label of the dense orbit in the commuting space of `t`'s normal form.
 */
enum TriStatus tri_oracle(const struct TriTriangle *t,
                          uint64_t seed,
                          uintptr_t trials,
                          int64_t range,
                          struct TriTriangle **out);

/**
 * `|P(w)|` for `w = (w[0], ..., w[len-1])`.
 */
enum TriStatus tri_enumerate_count(const uint32_t *w, uintptr_t len, uintptr_t *out);

/**
 * Array number `index` of `P(w)` in canonical order.
 */
enum TriStatus tri_enumerate_nth(const uint32_t *w,
                                 uintptr_t len,
                                 uintptr_t index,
                                 struct TriTriangle **out);

enum TriStatus tri_poset_new(const uint32_t *w, uintptr_t len, struct TriPoset **out);

void tri_poset_free(struct TriPoset *p);

enum TriStatus tri_poset_len(const struct TriPoset *p, uintptr_t *out);

enum TriStatus tri_poset_cover_count(const struct TriPoset *p, uintptr_t *out);

enum TriStatus tri_poset_element(const struct TriPoset *p,
                                 uintptr_t index,
                                 struct TriTriangle **out);

enum TriStatus tri_poset_to_json(const struct TriPoset *p, char **out);

enum TriStatus tri_poset_to_dot(const struct TriPoset *p, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRIARRAY_H */
