/* C interface for the qgrk0 library. Generated by cbindgen; do not edit. */

#ifndef QGRK0_H
#define QGRK0_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum QgrStatus {
  QgrStatus_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  QgrStatus_NullArgument = 1,
  /**
   * Unparseable text input (polynomial or module JSON).
   */
  QgrStatus_InvalidInput = 2,
  /**
   * Mathematically invalid request (bad degree data, non-positive class).
   */
  QgrStatus_DomainError = 3,
  /**
   * A certification or internal consistency check failed.
   */
  QgrStatus_CertificationError = 4,
} QgrStatus;

/**
 * Validated degree data handle.
 */
typedef struct QgrDegrees QgrDegrees;

/**
 * Sparse integer Laurent polynomial handle.
 */
typedef struct QgrPoly QgrPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Most recent error message on this thread, or null. Free the result with
 * `qgr_string_free`.
 */
char *qgr_last_error_message(void);

/**
 * Release a string returned by this library.
 */
void qgr_string_free(char *s);

/**
 * Validate generator degrees. On success stores a fresh handle in `out`.
 */
enum QgrStatus qgr_degrees_new(const int64_t *values, size_t len, struct QgrDegrees **out);

void qgr_degrees_free(struct QgrDegrees *handle);

/**
 * Parse the sparse `exp:coeff,...` text form.
 */
enum QgrStatus qgr_poly_parse(const char *text, struct QgrPoly **out);

void qgr_poly_free(struct QgrPoly *handle);

/**
 * Canonical sparse text of a polynomial handle.
 */
enum QgrStatus qgr_poly_text(const struct QgrPoly *handle, char **out);

/**
 * Hilbert coefficients `a_0..a_n` as a JSON array (numbers, or decimal
 * strings beyond 64 bits).
 */
enum QgrStatus qgr_hilbert_json(const struct QgrDegrees *degrees, size_t n, char **out);

/**
 * Exact sign of `p` at the ordering root: -1, 0, or +1 through `out_sign`.
 */
enum QgrStatus qgr_sign_at_theta(const struct QgrDegrees *degrees,
                                 const struct QgrPoly *poly,
                                 int32_t *out_sign);

/**
 * Smallest positive real root of the defining polynomial, pinned to 1e-15.
 */
enum QgrStatus qgr_theta(const struct QgrDegrees *degrees, double *out);

/**
 * Canonical class form as JSON: `{degrees, rep, cone}`.
 */
enum QgrStatus qgr_k0_reduce_json(const struct QgrDegrees *degrees,
                                  const struct QgrPoly *poly,
                                  char **out);

/**
 * Degree-shift action on a class, as JSON.
 */
enum QgrStatus qgr_k0_shift_json(const struct QgrDegrees *degrees,
                                 const struct QgrPoly *poly,
                                 int64_t shift,
                                 char **out);

/**
 * 1 when the class of `p` is zero (torsion q-polynomial), else 0.
 */
enum QgrStatus qgr_classify_torsion(const struct QgrDegrees *degrees,
                                    const struct QgrPoly *poly,
                                    int32_t *out);

/**
 * Realize a positive class: `{degrees, poly, description, q, verification}`.
 */
enum QgrStatus qgr_realize_json(const struct QgrDegrees *degrees,
                                const struct QgrPoly *poly,
                                char **out);

/**
 * Verify a `(polynomial, module description JSON)` pair; returns the
 * verification report as JSON.
 */
enum QgrStatus qgr_verify_json(const struct QgrDegrees *degrees,
                               const struct QgrPoly *poly,
                               const char *module_json,
                               char **out);

/**
 * Degree-data summary: defining polynomial, factorization, ordering root.
 */
enum QgrStatus qgr_analyze_json(const struct QgrDegrees *degrees, char **out);

/**
 * Numeric roots, max-modulus certification, and factorization as JSON.
 * Pass `tolerance <= 0` for the degree-dependent default.
 */
enum QgrStatus qgr_roots_json(const struct QgrDegrees *degrees, double tolerance, char **out);

/**
 * Graph certification report as JSON. Pass `tolerance <= 0` for 1e-12.
 */
enum QgrStatus qgr_graph_json(const struct QgrDegrees *degrees, double tolerance, char **out);

/**
 * DOT text for the expanded quiver followed by the second graph.
 */
enum QgrStatus qgr_graph_dot(const struct QgrDegrees *degrees, char **out);

/**
 * Run the built-in example suite; returns the number of failed items.
 */
int32_t qgr_selftest(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QGRK0_H */
