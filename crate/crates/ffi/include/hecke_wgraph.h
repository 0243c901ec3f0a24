#ifndef HECKE_WGRAPH_H
#define HECKE_WGRAPH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes for every fallible call.
 */
typedef enum HwStatus {
  HW_STATUS_OK = 0,
  HW_STATUS_NULL_POINTER = 1,
  HW_STATUS_INVALID_ARGUMENT = 2,
  HW_STATUS_TOO_LARGE = 3,
  HW_STATUS_COMPUTATION_FAILED = 4,
  HW_STATUS_PANIC = 5,
} HwStatus;

/**
 * A finite Coxeter group with its enumerated elements.
 */
typedef struct HwGroup HwGroup;

/**
 * The Kazhdan-Lusztig table of a group.
 */
typedef struct HwKl HwKl;

/**
 * A W-graph with its vertices, edges and generator matrices.
 */
typedef struct HwWGraph HwWGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer is
 * valid until the next failing call on the same thread; do not free it.
 */
const char *hw_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be freed twice.
 */
void hw_string_free(char *s);

/**
 * Library version as a static NUL-terminated string.
 */
const char *hw_version(void);

/**
 * Builds a named group such as "B3" or "I2(5)".
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum HwStatus hw_group_new_named(const char *name, struct HwGroup **out);

/**
 * Builds a group from a row-major `rank x rank` Coxeter matrix. Groups with
 * more than `cap` elements, including infinite ones, are rejected.
 *
 * # Safety
 * `matrix` must point to `rank * rank` readable values; `out` must be writable.
 */
enum HwStatus hw_group_new_matrix(size_t rank,
                                  const uint32_t *matrix,
                                  size_t cap,
                                  struct HwGroup **out);

/**
 * # Safety
 * `g` must come from `hw_group_new_*` and must not be used afterwards.
 */
void hw_group_free(struct HwGroup *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum HwStatus hw_group_order(const struct HwGroup *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum HwStatus hw_group_rank(const struct HwGroup *g, size_t *out);

/**
 * Length of the element with the given index.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum HwStatus hw_group_length(const struct HwGroup *g, size_t index, size_t *out);

/**
 * ShortLex reduced word of an element, e.g. "s1s2" or "e".
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum HwStatus hw_group_element_word(const struct HwGroup *g, size_t index, char **out);

/**
 * Computes the Kazhdan-Lusztig table.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum HwStatus hw_kl_new(const struct HwGroup *g, struct HwKl **out);

/**
 * # Safety
 * `kl` must come from `hw_kl_new` and must not be used afterwards.
 */
void hw_kl_free(struct HwKl *kl);

/**
 * `mu(y, w)` for element indices `y`, `w`.
 *
 * # Safety
 * `kl` must be a live handle; `out` must be writable.
 */
enum HwStatus hw_kl_mu(const struct HwKl *kl, size_t y, size_t w, int64_t *out);

/**
 * Coefficient of `T_y` in `C_w` as JSON `[[exponent, coefficient], ...]`.
 *
 * # Safety
 * `kl` must be a live handle; `out` must be writable.
 */
enum HwStatus hw_kl_poly_json(const struct HwKl *kl, size_t y, size_t w, char **out);

/**
 * W-graph of the generic Specht module for the subset `J` given as a bit
 * mask (bit `i` set when generator `s_{i+1}` is in `J`).
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum HwStatus hw_wgraph_new(const struct HwGroup *g, uint32_t j_mask, struct HwWGraph **out);

/**
 * # Safety
 * `w` must come from `hw_wgraph_new` and must not be used afterwards.
 */
void hw_wgraph_free(struct HwWGraph *w);

/**
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum HwStatus hw_wgraph_vertex_count(const struct HwWGraph *w, size_t *out);

/**
 * Number of undirected edges with nonzero `mu`.
 *
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum HwStatus hw_wgraph_edge_count(const struct HwWGraph *w, size_t *out);

/**
 * Sets `*out` to 1 when the generator matrices satisfy the quadratic and
 * braid relations, else 0.
 *
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum HwStatus hw_wgraph_verify(const struct HwWGraph *w, int32_t *out);

/**
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum HwStatus hw_wgraph_to_json(const struct HwWGraph *w, char **out);

/**
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum HwStatus hw_wgraph_to_dot(const struct HwWGraph *w, char **out);

/**
 * Runs the invariant suites. `level` is 1 for fast and 2 for full. Sets
 * `*passed` to 1 when every assertive suite passes; `report_json` may be
 * NULL, otherwise it receives the full report.
 *
 * # Safety
 * `kl` must be a live handle; `passed` must be writable; `report_json`
 * must be NULL or writable.
 */
enum HwStatus hw_verify(const struct HwKl *kl,
                        uint32_t level,
                        uint64_t seed,
                        int32_t *passed,
                        char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HECKE_WGRAPH_H */
