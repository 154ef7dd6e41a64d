#ifndef CHEREDNIK_H
#define CHEREDNIK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ChStatus {
  CH_STATUS_OK = 0,
  CH_STATUS_NULL_POINTER = 1,
  CH_STATUS_INVALID_UTF8 = 2,
  CH_STATUS_PARSE = 3,
  CH_STATUS_DOMAIN = 4,
  CH_STATUS_NON_GENERIC = 5,
  CH_STATUS_UNSUPPORTED = 6,
  /**
   * A check ran and found a counterexample; the JSON report is still returned.
   */
  CH_STATUS_CHECK_FAILED = 7,
  CH_STATUS_INTERNAL = 8,
  CH_STATUS_PANIC = 9,
} ChStatus;

/**
 * Opaque handle: a group together with a parameter point.
 */
typedef struct ChContext ChContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a context with symbolic parameters.
 *
 * # Safety
 * `out` must be a valid pointer; the handle is released with [`ch_context_free`].
 */
enum ChStatus ch_context_new(uint32_t r, uint32_t p, size_t n, struct ChContext **out);

/**
 * Creates a context at κ = 1, c_s = (h+1)/h.
 *
 * # Safety
 * As for [`ch_context_new`].
 */
enum ChStatus ch_context_new_gordon(uint32_t r, uint32_t p, size_t n, struct ChContext **out);

/**
 * # Safety
 * `ctx` must come from a constructor above and not be used afterwards.
 */
void ch_context_free(struct ChContext *ctx);

/**
 * The eigenvector `f_μ` as JSON; `mu` is a comma-separated composition.
 * `method` 0 solves the triangular system, 1 uses the intertwiner recursion.
 *
 * # Safety
 * `ctx`, `mu` and `out` must be valid; `mu` is NUL-terminated.
 */
enum ChStatus ch_jack_json(const struct ChContext *ctx,
                           const char *mu,
                           uint32_t method,
                           char **out);

/**
 * Relation and PBW checks as JSON. Returns `CheckFailed` with the report when
 * a check fails.
 *
 * # Safety
 * `ctx` and `out` must be valid.
 */
enum ChStatus ch_verify_json(const struct ChContext *ctx, uint32_t max_deg, char **out);

/**
 * The report at c_s = (h+1)/h.
 *
 * # Safety
 * `out` must be valid.
 */
enum ChStatus ch_gordon_json(uint32_t r, uint32_t p, size_t n, char **out);

/**
 * # Safety
 * `out` must be valid.
 */
enum ChStatus ch_catalan_json(uint32_t r, uint32_t p, size_t n, size_t trunc, char **out);

/**
 * # Safety
 * `out` must be valid.
 */
enum ChStatus ch_exponents_json(uint32_t r, uint32_t p, size_t n, uint32_t m, char **out);

/**
 * # Safety
 * `out` must be valid.
 */
enum ChStatus ch_coxeter_number(uint32_t r, uint32_t p, size_t n, uint32_t *out);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void ch_string_free(char *s);

/**
 * Message of the last failure on this thread, or null. Valid until the next
 * failing call on the same thread.
 */
const char *ch_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHEREDNIK_H */
