#ifndef HOMRECON_H
#define HOMRECON_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; the numeric values match the CLI exit codes where they overlap.
 */
typedef enum HrStatus {
  HR_STATUS_OK = 0,
  /**
   * Bad argument: null pointer, unknown format, vertex out of range.
   */
  HR_STATUS_INVALID_ARGUMENT = 1,
  /**
   * Malformed or invalid input text.
   */
  HR_STATUS_VALIDATION = 2,
  /**
   * Instance exceeds a resource guard.
   */
  HR_STATUS_RESOURCE = 3,
  /**
   * A proven identity failed; please report.
   */
  HR_STATUS_INVARIANT = 4,
  /**
   * The library panicked; the handle arguments are left untouched.
   */
  HR_STATUS_PANIC = 5,
} HrStatus;

/**
 * Text formats accepted by `hr_coloring_parse` and `hr_coloring_emit`.
 */
typedef enum HrFormat {
  HR_FORMAT_JSON = 0,
  HR_FORMAT_GRAPH6 = 1,
} HrFormat;

/**
 * Opaque coloring handle.
 */
typedef struct HrColoring HrColoring;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread (empty after success).
 * The pointer stays valid until the next call on the same thread.
 */
const char *hr_last_error(void);

/**
 * New all-zero coloring on `n` vertices.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum HrStatus hr_coloring_new(size_t n, struct HrColoring **out);

/**
 * Parses a coloring from NUL-terminated `text`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum HrStatus hr_coloring_parse(const char *text, enum HrFormat format, struct HrColoring **out);

/**
 * Builds a coloring from a generator spec such as `partition(0,1,2|3,4|5)`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum HrStatus hr_coloring_generate(const char *spec, struct HrColoring **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `c` must be null or a handle returned by this library and not yet freed.
 */
void hr_coloring_free(struct HrColoring *c);

/**
 * Number of vertices (0 for a null handle).
 *
 * # Safety
 * `c` must be null or a live handle.
 */
size_t hr_coloring_n(const struct HrColoring *c);

/**
 * Color of the pair `{i, j}`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum HrStatus hr_coloring_get(const struct HrColoring *c, size_t i, size_t j, uint8_t *out);

/**
 * Sets the color of the pair `{i, j}` (`color` is 0 or 1).
 *
 * # Safety
 * `c` must be a live handle.
 */
enum HrStatus hr_coloring_set(struct HrColoring *c, size_t i, size_t j, uint8_t color);

/**
 * Serializes a coloring; release the string with `hr_string_free`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum HrStatus hr_coloring_emit(const struct HrColoring *c, enum HrFormat format, char **out);

/**
 * Whether only the coloring and its complement share its homogeneous sets.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum HrStatus hr_is_reconstructible(const struct HrColoring *c, bool *out);

/**
 * Least distance to a nontrivial reconstruction (0 when reconstructible).
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum HrStatus hr_r_value(const struct HrColoring *c, size_t *out);

/**
 * Writes up to `cap` critical pairs into `pairs` as `x0, y0, x1, y1, ...`
 * (so `pairs` needs room for `2 * cap` entries) and the total number of
 * critical pairs into `count`, which may exceed `cap`.
 *
 * # Safety
 * `c` must be a live handle; `pairs` must be null (with `cap == 0`) or hold
 * `2 * cap` entries; `count` must be writable.
 */
enum HrStatus hr_critical_pairs(const struct HrColoring *c,
                                size_t *pairs,
                                size_t cap,
                                size_t *count);

/**
 * Canonical representative under relabeling and complementation (n <= 9).
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum HrStatus hr_canonical_form(const struct HrColoring *c, struct HrColoring **out);

/**
 * Full classification as a JSON object with keys `critical_pairs`,
 * `r_value`, `reconstructible`, `solution_count` and `witness`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum HrStatus hr_classify_json(const struct HrColoring *c, char **out);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void hr_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOMRECON_H */
