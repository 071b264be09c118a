#ifndef YAGITA_H
#define YAGITA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum YagitaStatus {
  YAGITA_STATUS_OK = 0,
  YAGITA_STATUS_NULL_POINTER = 1,
  YAGITA_STATUS_INVALID_ARGUMENT = 2,
  YAGITA_STATUS_PRECONDITION = 3,
  YAGITA_STATUS_PARSE = 4,
  YAGITA_STATUS_CAP_EXCEEDED = 5,
  YAGITA_STATUS_INTERNAL = 6,
  YAGITA_STATUS_PANIC = 7,
} YagitaStatus;

/**
 * Opaque polynomial over F_p.
 */
typedef struct YagitaPoly YagitaPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next call into this library on the same thread.
 */
const char *yagita_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void yagita_string_free(char *s);

/**
 * Largest power of `p` that is at most `num / den`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum YagitaStatus yagita_psi(uint64_t num, uint64_t den, uint64_t p, uint64_t *out);

/**
 * Closed-form invariant of `Sp(2n, O)`; `ring` is `Z`, `Zzeta`, `real` or `custom:L`.
 *
 * # Safety
 * `ring` must be a NUL-terminated string, `out` valid for writes.
 */
enum YagitaStatus yagita_theorem_value(uint64_t p, uint64_t n, const char *ring, uint64_t *out);

/**
 * `GL(N, O)` value; `advisory` is set when `N < p - 1`.
 *
 * # Safety
 * `ring` must be a NUL-terminated string; `out` and `advisory` valid for writes.
 */
enum YagitaStatus yagita_gl_value(uint64_t p,
                                  uint64_t big_n,
                                  const char *ring,
                                  uint64_t *out,
                                  bool *advisory);

/**
 * Parses `c0 + c1*x + ...` over F_p into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string, `out` valid for writes.
 */
enum YagitaStatus yagita_poly_parse(uint64_t p, const char *text, struct YagitaPoly **out);

/**
 * Releases a polynomial handle. NULL is ignored.
 *
 * # Safety
 * `poly` must come from [`yagita_poly_parse`] and not have been freed.
 */
void yagita_poly_free(struct YagitaPoly *poly);

/**
 * gcd of the exponents carrying nonzero coefficients.
 *
 * # Safety
 * `poly` must be a live handle, `out` valid for writes.
 */
enum YagitaStatus yagita_poly_support_gcd(const struct YagitaPoly *poly, uint64_t *out);

/**
 * Text form of the polynomial; free with [`yagita_string_free`].
 *
 * # Safety
 * `poly` must be a live handle, `out` valid for writes.
 */
enum YagitaStatus yagita_poly_to_string(const struct YagitaPoly *poly, char **out);

/**
 * Period-shape verdict as JSON; free with [`yagita_string_free`].
 *
 * # Safety
 * `poly` must be a live handle, `json_out` valid for writes.
 */
enum YagitaStatus yagita_poly_check_period_form(const struct YagitaPoly *poly, char **json_out);

/**
 * Upper-bound report as JSON (schema 1); `passed` may be NULL.
 *
 * # Safety
 * `ring` must be a NUL-terminated string, `json_out` valid for writes,
 * `passed` NULL or valid for writes.
 */
enum YagitaStatus yagita_verify_upper(uint64_t p,
                                      uint64_t n,
                                      const char *ring,
                                      char **json_out,
                                      bool *passed);

/**
 * Lower-bound report as JSON (schema 1); `passed` may be NULL.
 *
 * # Safety
 * Same as [`yagita_verify_upper`].
 */
enum YagitaStatus yagita_verify_lower(uint64_t p,
                                      uint64_t n,
                                      const char *ring,
                                      char **json_out,
                                      bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* YAGITA_H */
