#ifndef REPTILE_LAB_H
#define REPTILE_LAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum RlStatus {
  RL_STATUS_OK = 0,
  RL_STATUS_NULL_POINTER = 1,
  RL_STATUS_INVALID_ARGUMENT = 2,
  RL_STATUS_PARSE = 3,
  /**
   * The search finished without finding a tiling.
   */
  RL_STATUS_NOT_FOUND = 4,
  /**
   * The search ran out of its node budget.
   */
  RL_STATUS_ABORTED = 5,
  /**
   * A tiling was found but failed verification.
   */
  RL_STATUS_UNVERIFIED = 6,
  RL_STATUS_INTERNAL = 7,
} RlStatus;

/**
 * A parsed Coxeter diagram.
 */
typedef struct RlDiagram RlDiagram;

/**
 * A verified tiling of a spherical triangle.
 */
typedef struct RlTiling RlTiling;

/**
 * Library version as a static NUL-terminated string. Do not free.
 */
const char *rl_version(void);

/**
 * Message for the last failed call on this thread, or NULL. Free with [`rl_string_free`].
 */
char *rl_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void rl_string_free(char *s);

/**
 * Edge lengths of the spherical triangle with the given angles (radians); edge `i` is
 * opposite angle `i`.
 *
 * # Safety
 * `angles` and `out` must each point to three doubles.
 */
enum RlStatus rl_spherical_edge_lengths(const double *angles, double *out);

/**
 * Degree over Q of the real `d`-th root of `k`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum RlStatus rl_algebraic_degree(uint64_t k, uint32_t d, uint32_t *out);

/**
 * Parses a diagram from its JSON fixture form.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RlStatus rl_diagram_from_json(const char *json, struct RlDiagram **out);

/**
 * # Safety
 * `d` must come from [`rl_diagram_from_json`] and not have been freed. NULL is ignored.
 */
void rl_diagram_free(struct RlDiagram *d);

/**
 * Order of the label-preserving automorphism group.
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum RlStatus rl_diagram_automorphism_count(const struct RlDiagram *d, size_t *out);

/**
 * Searches for a tiling of the triangle with angles `target` (radians) by copies of the
 * tile whose angles are `num[i]/den[i]` times pi, using at most `n_max` tiles.
 *
 * Returns `RL_STATUS_OK` with a handle in `out` only when a tiling was found and verified.
 *
 * # Safety
 * `num`, `den` and `target` must each point to three values; `out` must be valid.
 */
enum RlStatus rl_tile_search(const int64_t *num,
                             const int64_t *den,
                             const double *target,
                             size_t n_max,
                             uint64_t node_budget,
                             struct RlTiling **out);

/**
 * Number of tiles in a tiling.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid pointer.
 */
enum RlStatus rl_tiling_tile_count(const struct RlTiling *t, size_t *out);

/**
 * Tiling as JSON (`vertices`, `target`, `tiles`). Free the string with [`rl_string_free`].
 *
 * # Safety
 * `t` must be a live handle and `out` a valid pointer.
 */
enum RlStatus rl_tiling_to_json(const struct RlTiling *t, char **out);

/**
 * # Safety
 * `t` must come from [`rl_tile_search`] and not have been freed. NULL is ignored.
 */
void rl_tiling_free(struct RlTiling *t);

#endif  /* REPTILE_LAB_H */
