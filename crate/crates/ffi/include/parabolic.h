#ifndef PARABOLIC_H
#define PARABOLIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define PB_OK 0

/**
 * A required pointer argument was null.
 */
#define PB_NULL_ARGUMENT 100

/**
 * A string argument was not valid UTF-8.
 */
#define PB_INVALID_UTF8 101

/**
 * The library panicked; this is a bug.
 */
#define PB_PANIC 102

/**
 * A subset of the roots of one system.
 */
typedef struct PbSubset PbSubset;

/**
 * A root system.
 */
typedef struct PbSystem PbSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *pb_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string obtained from this library, not yet freed.
 */
void pb_string_free(char *s);

/**
 * Builds a catalog system: finite names such as `A2` or `psl(3|3)`, affine
 * `X^(1)` or toroidal `Tn(X)`, the latter two truncated at `window`.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` a valid pointer.
 */
int32_t pb_system_from_name(const char *name, uint32_t window, struct PbSystem **out);

/**
 * Loads a system from its JSON form.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
int32_t pb_system_from_json(const char *json, struct PbSystem **out);

/**
 * # Safety
 * `sys` must be null or a handle from this library, not yet freed.
 */
void pb_system_free(struct PbSystem *sys);

/**
 * Number of roots, or 0 for a null handle.
 *
 * # Safety
 * `sys` must be null or a live handle.
 */
size_t pb_system_len(const struct PbSystem *sys);

/**
 * Dimension of the canonical coordinates, or 0 for a null handle.
 *
 * # Safety
 * `sys` must be null or a live handle.
 */
size_t pb_system_dim(const struct PbSystem *sys);

/**
 * # Safety
 * `sys` must be a live handle and `out` a valid pointer.
 */
int32_t pb_system_to_json(const struct PbSystem *sys, char **out);

/**
 * Subset from a list of root ids.
 *
 * # Safety
 * `sys` must be a live handle, `ids` must point to `len` values (or be null
 * when `len` is 0) and `out` must be valid.
 */
int32_t pb_subset_from_ids(const struct PbSystem *sys,
                           const size_t *ids,
                           size_t len,
                           struct PbSubset **out);

/**
 * Subset from `{"system": name, "members": [ids]}`, checked against `sys`.
 *
 * # Safety
 * `sys` must be a live handle, `json` a nul-terminated string, `out` valid.
 */
int32_t pb_subset_from_json(const struct PbSystem *sys, const char *json, struct PbSubset **out);

/**
 * # Safety
 * `p` must be null or a handle from this library, not yet freed.
 */
void pb_subset_free(struct PbSubset *p);

/**
 * Writes 1 to `out` when the subset is parabolic, 0 otherwise.
 *
 * # Safety
 * Handles must be live and `out` valid.
 */
int32_t pb_is_parabolic(const struct PbSystem *sys, const struct PbSubset *p, int32_t *out);

/**
 * Classifies the subset and writes the verdict JSON, with its certificate.
 *
 * # Safety
 * Handles must be live and `out` valid.
 */
int32_t pb_classify(const struct PbSystem *sys, const struct PbSubset *p, char **out);

/**
 * Re-checks a verdict JSON against the system and subset; `PB_OK` when the
 * certificate holds.
 *
 * # Safety
 * Handles must be live and `verdict` a nul-terminated string.
 */
int32_t pb_verify_verdict(const struct PbSystem *sys,
                          const struct PbSubset *p,
                          const char *verdict);

/**
 * Report JSON for the H(n) subset, `n >= 10`.
 *
 * # Safety
 * `out` must be valid.
 */
int32_t pb_gallery_h(size_t n, char **out);

/**
 * Report JSON for the psl(m|m) subset, `m >= 3`.
 *
 * # Safety
 * `out` must be valid.
 */
int32_t pb_gallery_psl(size_t m, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PARABOLIC_H */
