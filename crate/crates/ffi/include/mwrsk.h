#ifndef MWRSK_H
#define MWRSK_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  MWRSK_STATUS_OK = 0,
  MWRSK_STATUS_NULL_POINTER = 1,
  MWRSK_STATUS_INVALID_UTF8 = 2,
  MWRSK_STATUS_PARSE = 3,
  /**
   * Well-formed input outside the domain of the operation.
   */
  MWRSK_STATUS_INVALID_INPUT = 4,
  MWRSK_STATUS_BUDGET = 5,
  MWRSK_STATUS_UNKNOWN_SUITE = 6,
  /**
   * A verification run finished with failures; the report is still returned.
   */
  MWRSK_STATUS_CHECK_FAILED = 7,
  MWRSK_STATUS_INTERNAL = 8,
  MWRSK_STATUS_PANIC = 9,
} MwrskStatus;

/**
 * A tuple of ladders, as produced by RSK.
 */
typedef struct MwrskLadderTuple MwrskLadderTuple;

/**
 * A multisegment, possibly with dummy segments.
 */
typedef struct MwrskMultisegment MwrskMultisegment;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library from the same thread.
 */
const char *mwrsk_last_error(void);

/**
 * Library version as a static string.
 */
const char *mwrsk_version(void);

/**
 * # Safety
 * `s` must be null or come from this library.
 */
void mwrsk_string_free(char *s);

/**
 * Parses `[1,3]+[2,2]+d(0)` style text or the JSON form.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
MwrskStatus mwrsk_multisegment_parse(const char *text, MwrskMultisegment **out);

/**
 * # Safety
 * `m` must be null or a handle from this library, not yet freed.
 */
void mwrsk_multisegment_free(MwrskMultisegment *m);

/**
 * Canonical text form; free with `mwrsk_string_free`.
 *
 * # Safety
 * Pointers must be valid.
 */
MwrskStatus mwrsk_multisegment_to_string(const MwrskMultisegment *m, char **out);

/**
 * # Safety
 * Pointers must be valid.
 */
MwrskStatus mwrsk_multisegment_to_json(const MwrskMultisegment *m, char **out);

/**
 * Number of segments, dummies included.
 *
 * # Safety
 * `m` must be a valid handle.
 */
size_t mwrsk_multisegment_len(const MwrskMultisegment *m);

/**
 * # Safety
 * Pointers must be valid.
 */
bool mwrsk_multisegment_equal(const MwrskMultisegment *a, const MwrskMultisegment *b);

/**
 * One MW step. With `enhanced` set, dummy segments are kept. The removed
 * segment is written to `b_out` and `e_out`.
 *
 * # Safety
 * Pointers must be valid.
 */
MwrskStatus mwrsk_mw_step(const MwrskMultisegment *m,
                          bool enhanced,
                          MwrskMultisegment **dagger_out,
                          int32_t *b_out,
                          int32_t *e_out);

/**
 * The MW involution `m -> m#` on a genuine multisegment.
 *
 * # Safety
 * Pointers must be valid.
 */
MwrskStatus mwrsk_mw_involution(const MwrskMultisegment *m, MwrskMultisegment **out);

/**
 * # Safety
 * Pointers must be valid.
 */
MwrskStatus mwrsk_rsk(const MwrskMultisegment *m, MwrskLadderTuple **out);

/**
 * # Safety
 * Pointers must be valid.
 */
MwrskStatus mwrsk_rsk_inverse(const MwrskLadderTuple *t, MwrskMultisegment **out);

/**
 * Socle of `Z(m) x Z(l)`, where `l` must be a ladder.
 *
 * # Safety
 * Pointers must be valid.
 */
MwrskStatus mwrsk_socle(const MwrskMultisegment *m,
                        const MwrskMultisegment *ladder,
                        MwrskMultisegment **out);

/**
 * Parses ladders separated by `;`.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
MwrskStatus mwrsk_ladder_tuple_parse(const char *text, MwrskLadderTuple **out);

/**
 * # Safety
 * `t` must be null or a handle from this library, not yet freed.
 */
void mwrsk_ladder_tuple_free(MwrskLadderTuple *t);

/**
 * # Safety
 * `t` must be a valid handle.
 */
size_t mwrsk_ladder_tuple_len(const MwrskLadderTuple *t);

/**
 * # Safety
 * Pointers must be valid.
 */
MwrskStatus mwrsk_ladder_tuple_to_string(const MwrskLadderTuple *t, char **out);

/**
 * Copies ladder `i` out as a multisegment.
 *
 * # Safety
 * Pointers must be valid.
 */
MwrskStatus mwrsk_ladder_tuple_get(const MwrskLadderTuple *t, size_t i, MwrskMultisegment **out);

/**
 * Runs a verification suite on the window `lo..=hi` and writes the JSON
 * report. Returns `CheckFailed` (with the report) if an assertion failed.
 *
 * # Safety
 * `suite` must be a nul-terminated string and `json_out` a valid pointer.
 */
MwrskStatus mwrsk_verify(const char *suite,
                         int32_t lo,
                         int32_t hi,
                         size_t max_segments,
                         size_t dummy_budget,
                         char **json_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MWRSK_H */
