#ifndef PPERM_H
#define PPERM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of every fallible call.
 */
typedef enum PpStatus {
  PP_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  PP_STATUS_NULL_POINTER = 1,
  /**
   * A parameter was malformed or not valid UTF-8.
   */
  PP_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The request is outside the range an engine supports.
   */
  PP_STATUS_OUT_OF_RANGE = 3,
  /**
   * Independent engines produced different answers.
   */
  PP_STATUS_DISAGREEMENT = 4,
  /**
   * A caller-provided buffer is too small.
   */
  PP_STATUS_BUFFER_TOO_SMALL = 5,
  /**
   * An internal consistency check failed or the library panicked.
   */
  PP_STATUS_INTERNAL = 6,
} PpStatus;

/**
 * Opaque exact polynomial with rational coefficients.
 */
typedef struct PpPoly PpPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Ehrhart polynomial of `P(m, n)` in `t`. `method` names an engine
 * (e.g. "interpolate", "draconian"); null picks the default for the size.
 *
 * # Safety
 * `method` is null or a NUL-terminated string; `out` is a valid pointer.
 */
enum PpStatus pp_ehrhart(size_t m, size_t n, const char *method, struct PpPoly **out);

/**
 * h-polynomial of `P(m, n)` in `t` from the face census.
 *
 * # Safety
 * `out` is a valid pointer.
 */
enum PpStatus pp_h_poly(size_t m, size_t n, struct PpPoly **out);

/**
 * Normalized volume of `P(m, ·)` as a polynomial, valid for `n >= m - 1`.
 * With `shifted` false the variable is `n`; otherwise it is `N = n - m + 1`.
 *
 * # Safety
 * `out` is a valid pointer.
 */
enum PpStatus pp_volume_poly(size_t m, bool shifted, struct PpPoly **out);

/**
 * Degree of the polynomial, or -1 for the zero polynomial or a null handle.
 *
 * # Safety
 * `p` is null or a handle returned by this library.
 */
int64_t pp_poly_degree(const struct PpPoly *p);

/**
 * Coefficient of `x^i` as an exact string such as "7/2".
 *
 * # Safety
 * `p` is a handle returned by this library; `out` is a valid pointer.
 */
enum PpStatus pp_poly_coeff(const struct PpPoly *p, size_t i, char **out);

/**
 * JSON object with the coefficient strings (lowest degree first), the
 * variable name and a rendered form.
 *
 * # Safety
 * `p` is a handle returned by this library; `out` is a valid pointer.
 */
enum PpStatus pp_poly_to_json(const struct PpPoly *p, char **out);

/**
 * Releases a polynomial handle. Null is ignored.
 *
 * # Safety
 * `p` is null or a handle returned by this library, not yet freed.
 */
void pp_poly_free(struct PpPoly *p);

/**
 * Normalized volume `v(m, n)` as a decimal string. `method` names an
 * engine (e.g. "recursive", "oracle"); null picks the default.
 *
 * # Safety
 * `method` is null or a NUL-terminated string; `out` is a valid pointer.
 */
enum PpStatus pp_volume(size_t m, size_t n, const char *method, char **out);

/**
 * Number of lattice points in the dilate `t P(m, n)`.
 *
 * # Safety
 * `out` is a valid pointer.
 */
enum PpStatus pp_count_points(size_t m, size_t n, uint64_t t, size_t workers, uint64_t *out);

/**
 * Number of vertices of `P(m, n)`.
 *
 * # Safety
 * `out` is a valid pointer.
 */
enum PpStatus pp_vertex_count(size_t m, size_t n, uint64_t *out);

/**
 * Writes `f_0, ..., f_m` into `buf`. `written` receives `m + 1` even when
 * the buffer is too small, so callers can size a retry.
 *
 * # Safety
 * `buf` points to `len` writable values (or is null when `len` is 0);
 * `written` is a valid pointer.
 */
enum PpStatus pp_f_vector(size_t m, size_t n, uint64_t *buf, size_t len, size_t *written);

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next call into the library on the same thread.
 */
const char *pp_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *pp_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` is null or a string returned by this library, not yet freed.
 */
void pp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PPERM_H */
