#ifndef OCTOPLANE_H
#define OCTOPLANE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum OctoStatus {
  OCTO_STATUS_OK = 0,
  OCTO_STATUS_NULL_POINTER = 1,
  OCTO_STATUS_INVALID_UTF8 = 2,
  OCTO_STATUS_PARSE = 3,
  OCTO_STATUS_DOMAIN = 4,
  OCTO_STATUS_GROUP = 5,
  OCTO_STATUS_IO = 6,
  OCTO_STATUS_FIXTURE = 7,
  OCTO_STATUS_BUFFER_TOO_SMALL = 8,
  OCTO_STATUS_PANIC = 9,
} OctoStatus;

/**
 * Opaque simplicial complex.
 */
typedef struct OctoComplex OctoComplex;

/**
 * Opaque permutation group.
 */
typedef struct OctoGroup OctoGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *octo_last_error_message(void);

/**
 * Parse `.dat` text (count line, then rows of '0'/'1').
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum OctoStatus octo_complex_parse(const char *text, struct OctoComplex **out);

/**
 * Orbit representatives of `K_i`, `i` in 1..=4.
 *
 * # Safety
 * `out` must be writable.
 */
enum OctoStatus octo_complex_fixture(uint32_t i, struct OctoComplex **out);

/**
 * # Safety
 * `c` must come from this library and not be used afterwards.
 */
void octo_complex_free(struct OctoComplex *c);

/**
 * Size of the vertex universe.
 *
 * # Safety
 * `c` must be a live handle or null (returns 0).
 */
size_t octo_complex_num_vertices(const struct OctoComplex *c);

/**
 * # Safety
 * `c` must be a live handle or null (returns 0).
 */
size_t octo_complex_num_facets(const struct OctoComplex *c);

/**
 * Write `f_0..f_d` to `buf`. `*written` receives the number of entries;
 * if `len` is too small nothing is copied and the required length is
 * reported.
 *
 * # Safety
 * `buf` must hold `len` values; `written` must be writable.
 */
enum OctoStatus octo_complex_f_vector(const struct OctoComplex *c,
                                      uint64_t *buf,
                                      size_t len,
                                      size_t *written);

/**
 * Euler characteristic.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum OctoStatus octo_complex_euler(const struct OctoComplex *c, int64_t *out);

/**
 * The 351-element group on 27 vertices.
 *
 * # Safety
 * `out` must be writable.
 */
enum OctoStatus octo_group_g351(struct OctoGroup **out);

/**
 * Its 2106-element normaliser.
 *
 * # Safety
 * `out` must be writable.
 */
enum OctoStatus octo_group_normalizer(struct OctoGroup **out);

/**
 * The trivial group on `m` points.
 *
 * # Safety
 * `out` must be writable.
 */
enum OctoStatus octo_group_trivial(size_t m, struct OctoGroup **out);

/**
 * # Safety
 * `g` must be a live handle or null (returns 0).
 */
size_t octo_group_order(const struct OctoGroup *g);

/**
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void octo_group_free(struct OctoGroup *g);

/**
 * The union of the `g`-orbits of the facets of `reps`.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum OctoStatus octo_group_expand(const struct OctoGroup *g,
                                  const struct OctoComplex *reps,
                                  struct OctoComplex **out);

/**
 * Certify `g · reps` as a combinatorial manifold. `*certified` is 1 when
 * every simplex orbit has a nonevasive witness and 0 when inconclusive.
 *
 * # Safety
 * Handles must be live; `certified` must be writable.
 */
enum OctoStatus octo_certify(const struct OctoComplex *reps,
                             const struct OctoGroup *g,
                             int32_t *certified);

/**
 * The number of complexes `K_S` up to isomorphism plus the two without
 * distinguished subcomplexes, in decimal. Free with [`octo_string_free`].
 *
 * # Safety
 * `out` must be writable.
 */
enum OctoStatus octo_census_total(char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void octo_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OCTOPLANE_H */
