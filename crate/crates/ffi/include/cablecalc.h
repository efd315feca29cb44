#ifndef CABLECALC_H
#define CABLECALC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call.
 */
typedef enum CcStatus {
  CC_STATUS_OK = 0,
  CC_STATUS_NULL_POINTER = 1,
  CC_STATUS_INVALID_UTF8 = 2,
  CC_STATUS_PARSE_ERROR = 3,
  CC_STATUS_INVALID_ARGUMENT = 4,
  /**
   * The input lies outside every known classification; see
   * [`cc_last_hypothesis`].
   */
  CC_STATUS_NOT_COVERED = 5,
  CC_STATUS_NOT_SIMPLE = 6,
  CC_STATUS_OVERFLOW = 7,
  CC_STATUS_PANIC = 8,
} CcStatus;

typedef enum CcUtp {
  CC_UTP_YES = 0,
  CC_UTP_NO = 1,
  CC_UTP_UNKNOWN = 2,
} CcUtp;

/**
 * A classified knot type.
 */
typedef struct CcKnot CcKnot;

/**
 * An enumerated mountain range.
 */
typedef struct CcRange CcRange;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next call on the same thread.
 */
const char *cc_last_error(void);

/**
 * Machine-readable hypothesis code (e.g. `"base_not_utp"`) when the last
 * call returned [`CcStatus::NotCovered`], else NULL.
 */
const char *cc_last_hypothesis(void);

/**
 * Parses and classifies a knot expression such as `"T(2,3).cable(2,3)"`.
 *
 * # Safety
 * `expr` must be a NUL-terminated string; `out` must be writable.
 */
enum CcStatus cc_classify(const char *expr, struct CcKnot **out);

/**
 * # Safety
 * `knot` must come from [`cc_classify`] and not be used afterwards. NULL is ignored.
 */
void cc_knot_free(struct CcKnot *knot);

/**
 * # Safety
 * Pointers must be valid.
 */
enum CcStatus cc_knot_tb_bar(const struct CcKnot *knot, int64_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum CcStatus cc_knot_utp(const struct CcKnot *knot, enum CcUtp *out);

/**
 * `(r + tb) mod 2` for every Legendrian representative.
 *
 * # Safety
 * Pointers must be valid.
 */
enum CcStatus cc_knot_parity(const struct CcKnot *knot, uint8_t *out);

/**
 * Width as a reduced fraction; `*exact` is false when only the bracket
 * `[num, num + 1]` is known (then `*den` is 1).
 *
 * # Safety
 * Pointers must be valid.
 */
enum CcStatus cc_knot_width(const struct CcKnot *knot, int64_t *num, int64_t *den, bool *exact);

/**
 * # Safety
 * Pointers must be valid.
 */
enum CcStatus cc_knot_is_simple(const struct CcKnot *knot, bool *out);

/**
 * Copies up to `cap` peak rotation numbers into `buf` and stores the total
 * count in `*len`. Pass `buf = NULL, cap = 0` to query the count.
 * Returns [`CcStatus::NotSimple`] for knot types without peaks.
 *
 * # Safety
 * `buf` must have room for `cap` values; `len` must be writable.
 */
enum CcStatus cc_knot_peaks(const struct CcKnot *knot, int64_t *buf, size_t cap, size_t *len);

/**
 * Classification record as JSON. Release with [`cc_string_free`].
 *
 * # Safety
 * Pointers must be valid.
 */
enum CcStatus cc_knot_to_json(const struct CcKnot *knot, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards. NULL is ignored.
 */
void cc_string_free(char *s);

/**
 * Enumerates the mountain range from `tb_bar` down to `floor`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum CcStatus cc_range_new(const struct CcKnot *knot, int64_t floor, struct CcRange **out);

/**
 * Multiplicity at `(r, tb)`; zero outside the enumerated window.
 *
 * # Safety
 * Pointers must be valid.
 */
enum CcStatus cc_range_mult(const struct CcRange *range, int64_t r, int64_t tb, uint32_t *out);

/**
 * # Safety
 * `range` must come from [`cc_range_new`] and not be used afterwards. NULL is ignored.
 */
void cc_range_free(struct CcRange *range);

/**
 * Number of transverse classes with self-linking `sl` that have a
 * Legendrian approximation at `tb >= floor`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum CcStatus cc_transverse_count(const struct CcKnot *knot,
                                  int64_t floor,
                                  int64_t sl,
                                  uint32_t *out);

/**
 * Boundary slope `num/den` of the `k`-th non-thickenable torus of the
 * positive trefoil.
 *
 * # Safety
 * Out pointers must be valid.
 */
enum CcStatus cc_nonthick_slope(int64_t k, int64_t *num, int64_t *den);

/**
 * Farey-graph distance between two slopes written as `"p/q"`, an integer or `"inf"`.
 *
 * # Safety
 * Strings must be NUL-terminated; `out` must be writable.
 */
enum CcStatus cc_farey_distance(const char *s, const char *t, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CABLECALC_H */
