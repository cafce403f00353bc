#ifndef GRAPH_MOSAIC_H
#define GRAPH_MOSAIC_H

/* Generated by cbindgen from graph-mosaic-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Backend selector: fixed-width first, bignum on overflow.
 */
#define GM_BACKEND_AUTO 0

/**
 * Backend selector: checked 128-bit arithmetic only.
 */
#define GM_BACKEND_FIXED128 1

/**
 * Backend selector: arbitrary precision throughout.
 */
#define GM_BACKEND_BIGNUM 2

/**
 * State-matrix kind with blank bottom and top.
 */
#define GM_KIND_X_PLUS 0

/**
 * State-matrix kind with blank bottom, connected top.
 */
#define GM_KIND_X_MINUS 1

/**
 * State-matrix kind with connected bottom and top.
 */
#define GM_KIND_O_PLUS 2

/**
 * State-matrix kind with connected bottom, blank top.
 */
#define GM_KIND_O_MINUS 3

/**
 * Boundary side selector for [`gm_mosaic_boundary`].
 */
#define GM_SIDE_LEFT 0

#define GM_SIDE_RIGHT 1

#define GM_SIDE_TOP 2

#define GM_SIDE_BOTTOM 3

/**
 * Classification: adjacent tiles disagree on a shared edge.
 */
#define GM_MOSAIC_INVALID 0

/**
 * Classification: suitably connected, but the outer boundary carries
 * connection points.
 */
#define GM_MOSAIC_SUITABLY_CONNECTED 1

/**
 * Classification: a graph mosaic (suitably connected, blank boundary).
 */
#define GM_MOSAIC_GRAPH 2

/**
 * Largest index accepted by [`gm_lucas`].
 */
#define GM_MAX_LUCAS_INDEX (1 << 20)

/**
 * Result of every `gm_` call.
 */
typedef enum GmStatus {
  /**
   * Success.
   */
  GM_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  GM_STATUS_NULL_POINTER = 1,
  /**
   * An argument was out of range or otherwise unusable.
   */
  GM_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The request exceeds a built-in size guard.
   */
  GM_STATUS_LIMIT_EXCEEDED = 3,
  /**
   * The result does not fit the fixed-width backend.
   */
  GM_STATUS_OVERFLOW = 4,
  /**
   * Malformed input text.
   */
  GM_STATUS_PARSE_ERROR = 5,
  /**
   * A cross-check suite found a mismatch (see the error message).
   */
  GM_STATUS_VERIFY_FAILED = 6,
  /**
   * A defect inside the library; never expected.
   */
  GM_STATUS_INTERNAL = 7,
} GmStatus;

/**
 * Opaque handle: the magnified state matrix of an `m x n` grid.
 */
typedef struct GmMagnified GmMagnified;

/**
 * Opaque handle: a parsed mosaic.
 */
typedef struct GmMosaic GmMosaic;

/**
 * Opaque handle: the four column state matrices of one height.
 */
typedef struct GmStateMatrices GmStateMatrices;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string; never freed.
 */
const char *gm_version(void);

/**
 * Message describing this thread's most recent failure.
 *
 * The pointer stays valid until the next failing `gm_` call on the
 * same thread.  Empty string if nothing failed yet.  Never freed by
 * the caller.
 */
const char *gm_last_error_message(void);

/**
 * Release a string allocated by this library.  NULL is a no-op.
 *
 * # Safety
 *
 * `s` must have been produced by this library and not freed before.
 */
void gm_string_free(char *s);

/**
 * Count the graph mosaics on a `rows x cols` grid.
 *
 * On success `*out_count` receives the exact count as a decimal
 * string; release it with [`gm_string_free`].
 *
 * # Safety
 *
 * `out_count` must be valid for writes.
 */
enum GmStatus gm_count(uint64_t rows, uint64_t cols, int backend, char **out_count);

/**
 * The `k`-th boundary weight (2, 1, 3, 4, 7, ...), as a decimal string.
 *
 * # Safety
 *
 * `out_value` must be valid for writes.
 */
enum GmStatus gm_lucas(uint64_t k, char **out_value);

/**
 * Run every brute-force cross-check suite on grids up to `max_cells`
 * cells.  `Ok` when all suites pass; [`GmStatus::VerifyFailed`] with
 * the first differing value in the error message otherwise.
 */
enum GmStatus gm_verify(uint64_t max_cells);

/**
 * Build the four height-`m` state matrices.
 *
 * # Safety
 *
 * `out_handle` must be valid for writes.  Release the handle with
 * [`gm_state_matrices_free`].
 */
enum GmStatus gm_state_matrices_build(uint64_t m, int backend, struct GmStateMatrices **out_handle);

/**
 * Matrix dimension (`2^m`) behind the handle.
 *
 * # Safety
 *
 * `handle` must be a live handle, `out_dim` valid for writes.
 */
enum GmStatus gm_state_matrices_dim(const struct GmStateMatrices *handle, uint64_t *out_dim);

/**
 * Entry `(i, j)` (1-based) of the matrix of the given kind, as a
 * decimal string.
 *
 * # Safety
 *
 * `handle` must be a live handle, `out_value` valid for writes.
 */
enum GmStatus gm_state_matrices_entry(const struct GmStateMatrices *handle,
                                      int kind,
                                      uint64_t i,
                                      uint64_t j,
                                      char **out_value);

/**
 * Release a state-matrix handle.  NULL is a no-op.
 *
 * # Safety
 *
 * `handle` must come from [`gm_state_matrices_build`] and not be freed
 * twice.
 */
void gm_state_matrices_free(struct GmStateMatrices *handle);

/**
 * Build the magnified state matrix for an `m x n` grid.
 *
 * # Safety
 *
 * `out_handle` must be valid for writes.  Release the handle with
 * [`gm_magnified_free`].
 */
enum GmStatus gm_magnified_build(uint64_t m,
                                 uint64_t n,
                                 int backend,
                                 struct GmMagnified **out_handle);

/**
 * Matrix dimension (`2^(m+n)`) behind the handle.
 *
 * # Safety
 *
 * `handle` must be a live handle, `out_dim` valid for writes.
 */
enum GmStatus gm_magnified_dim(const struct GmMagnified *handle, uint64_t *out_dim);

/**
 * Entry `(i, j)` (1-based) as a decimal string.
 *
 * # Safety
 *
 * `handle` must be a live handle, `out_value` valid for writes.
 */
enum GmStatus gm_magnified_entry(const struct GmMagnified *handle,
                                 uint64_t i,
                                 uint64_t j,
                                 char **out_value);

/**
 * Sum of all entries, as a decimal string.
 *
 * # Safety
 *
 * `handle` must be a live handle, `out_value` valid for writes.
 */
enum GmStatus gm_magnified_entry_sum(const struct GmMagnified *handle, char **out_value);

/**
 * Release a magnified-matrix handle.  NULL is a no-op.
 *
 * # Safety
 *
 * `handle` must come from [`gm_magnified_build`] and not be freed
 * twice.
 */
void gm_magnified_free(struct GmMagnified *handle);

/**
 * Parse mosaic text (`"<rows> <cols>"` header, then hex tile rows).
 *
 * # Safety
 *
 * `text` must be a NUL-terminated string, `out_handle` valid for
 * writes.  Release the handle with [`gm_mosaic_free`].
 */
enum GmStatus gm_mosaic_parse(const char *text, struct GmMosaic **out_handle);

/**
 * Grid shape behind the handle.
 *
 * # Safety
 *
 * `handle` must be a live handle; out pointers must be valid for
 * writes.
 */
enum GmStatus gm_mosaic_shape(const struct GmMosaic *handle,
                              uint64_t *out_rows,
                              uint64_t *out_cols);

/**
 * Classify the mosaic: [`GM_MOSAIC_GRAPH`],
 * [`GM_MOSAIC_SUITABLY_CONNECTED`], or [`GM_MOSAIC_INVALID`].
 *
 * # Safety
 *
 * `handle` must be a live handle, `out_class` valid for writes.
 */
enum GmStatus gm_mosaic_classify(const struct GmMosaic *handle, int *out_class);

/**
 * Boundary word of one side as a string over `x`/`o`, read
 * top-to-bottom for the vertical sides and left-to-right otherwise.
 *
 * # Safety
 *
 * `handle` must be a live handle, `out_word` valid for writes.
 */
enum GmStatus gm_mosaic_boundary(const struct GmMosaic *handle, int side, char **out_word);

/**
 * Release a mosaic handle.  NULL is a no-op.
 *
 * # Safety
 *
 * `handle` must come from [`gm_mosaic_parse`] and not be freed twice.
 */
void gm_mosaic_free(struct GmMosaic *handle);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRAPH_MOSAIC_H */
