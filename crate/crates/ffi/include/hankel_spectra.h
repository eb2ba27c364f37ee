/* C interface for the Hankel spectral toolkit. */

#pragma once

/* Generated with cbindgen:0.26.0 */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every call.
 */
typedef enum hs_status {
  /**
   * Success.
   */
  HS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  HS_NULL_ARGUMENT = 1,
  /**
   * Arguments were readable but violate a model contract.
   */
  HS_INVALID_ARGUMENT = 2,
  /**
   * The computation itself failed (e.g. eigensolver non-convergence).
   */
  HS_COMPUTE_ERROR = 3,
  /**
   * An output buffer was too small; nothing was written.
   */
  HS_BUFFER_TOO_SMALL = 4,
} hs_status;

/**
 * Opaque band-prediction handle.
 */
typedef struct hs_prediction hs_prediction;

/**
 * Opaque eigenvalue-list handle.
 */
typedef struct hs_spectrum hs_spectrum;

/**
 * One oscillatory term of the discrete coefficient model:
 * amplitude `kappa > 0`, frequency `theta` in `(0, pi)`, phase `phi`.
 */
typedef struct hs_osc_term {
  double kappa;
  double theta;
  double phi;
} hs_osc_term;

/**
 * One oscillatory term of the half-line kernel model:
 * amplitude `h > 0`, frequency `b > 0`, phase `phi`.
 */
typedef struct hs_kernel_term {
  double h;
  double b;
  double phi;
} hs_kernel_term;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *hs_status_message(enum hs_status status);

/**
 * Band prediction from the discrete coefficient model
 * `h_n ~ (pi (n+1))^-1 [kappa_plus + (-1)^n kappa_minus
 *   + sum_j 2 kappa_j sin(n theta_j - phi_j)]`.
 *
 * `terms` may be null when `n_terms` is zero.  On success `*out` owns the
 * prediction; free it with [`hs_prediction_free`].
 *
 * # Safety
 * `terms` must point to `n_terms` readable elements (or be null with
 * `n_terms == 0`); `out` must be a valid writable pointer.
 */
enum hs_status hs_predict_coefficient_model(double kappa_plus,
                                            double kappa_minus,
                                            const struct hs_osc_term *terms,
                                            uintptr_t n_terms,
                                            double alpha0,
                                            struct hs_prediction **out);

/**
 * Band prediction from the half-line kernel model
 * `h(t) ~ h0/t (t -> 0) + h_inf/t (t -> inf)
 *   + sum_j 2 h_j cos(b_j log t + phi_j)/t`.
 *
 * `regular_at_origin` is a boolean flag (nonzero = the kernel has no
 * singular contribution at the origin; requires `h0 == 0`).
 *
 * # Safety
 * `terms` must point to `n_terms` readable elements (or be null with
 * `n_terms == 0`); `out` must be a valid writable pointer.
 */
enum hs_status hs_predict_kernel_model(double h0,
                                       double h_inf,
                                       const struct hs_kernel_term *terms,
                                       uintptr_t n_terms,
                                       double alpha0,
                                       int32_t regular_at_origin,
                                       struct hs_prediction **out);

/**
 * Number of a.c. bands, modulus bands, and thresholds in a prediction.
 * Any of the count out-pointers may be null to skip that count.
 *
 * # Safety
 * `prediction` must be a live handle from a predict call; non-null count
 * pointers must be writable.
 */
enum hs_status hs_prediction_counts(const struct hs_prediction *prediction,
                                    uintptr_t *ac_bands,
                                    uintptr_t *modulus_bands,
                                    uintptr_t *thresholds);

/**
 * Endpoints and multiplicity of the `index`-th a.c. band.  Out-pointers may
 * be null to skip a field; an out-of-range index returns
 * `HS_INVALID_ARGUMENT`.
 *
 * # Safety
 * `prediction` must be a live handle; non-null out-pointers writable.
 */
enum hs_status hs_prediction_ac_band(const struct hs_prediction *prediction,
                                     uintptr_t index,
                                     double *lo,
                                     double *hi,
                                     uintptr_t *multiplicity);

/**
 * Endpoints and multiplicity of the `index`-th modulus band.
 *
 * # Safety
 * `prediction` must be a live handle; non-null out-pointers writable.
 */
enum hs_status hs_prediction_modulus_band(const struct hs_prediction *prediction,
                                          uintptr_t index,
                                          double *lo,
                                          double *hi,
                                          uintptr_t *multiplicity);

/**
 * Copy the ascending threshold list into `buffer` (capacity in elements);
 * `*written` receives the count.  Returns `HS_BUFFER_TOO_SMALL` without
 * writing when the capacity is insufficient.
 *
 * # Safety
 * `prediction` must be a live handle; `buffer` must have `capacity`
 * writable elements; `written` (if non-null) must be writable.
 */
enum hs_status hs_prediction_thresholds(const struct hs_prediction *prediction,
                                        double *buffer,
                                        uintptr_t capacity,
                                        uintptr_t *written);

/**
 * Release a prediction handle.  Null is a no-op.
 *
 * # Safety
 * `prediction` must be a handle from a predict call, not yet freed.
 */
void hs_prediction_free(struct hs_prediction *prediction);

/**
 * Diagonalize the `n x n` Hankel section built from a raw coefficient array
 * (`matrix[i][j] = coefficients[i + j]`, so `len` must be at least
 * `2 n - 1`).  On success `*out` owns the spectrum handle.
 *
 * # Safety
 * `coefficients` must point to `len` readable elements; `out` must be
 * writable.
 */
enum hs_status hs_section_spectrum(const double *coefficients,
                                   uintptr_t len,
                                   uintptr_t n,
                                   struct hs_spectrum **out);

/**
 * Number of eigenvalues held by a spectrum handle.
 *
 * # Safety
 * `spectrum` must be a live handle; `n` must be writable.
 */
enum hs_status hs_spectrum_size(const struct hs_spectrum *spectrum, uintptr_t *n);

/**
 * Copy the ascending eigenvalue list into `buffer` (capacity in elements).
 * Returns `HS_BUFFER_TOO_SMALL` without writing when too small.
 *
 * # Safety
 * `spectrum` must be a live handle; `buffer` must have `capacity` writable
 * elements; `written` (if non-null) must be writable.
 */
enum hs_status hs_spectrum_eigenvalues(const struct hs_spectrum *spectrum,
                                       double *buffer,
                                       uintptr_t capacity,
                                       uintptr_t *written);

/**
 * Release a spectrum handle.  Null is a no-op.
 *
 * # Safety
 * `spectrum` must be a handle from [`hs_section_spectrum`], not yet freed.
 */
void hs_spectrum_free(struct hs_spectrum *spectrum);

/**
 * Odd spectral-density profile: `zeta(0+) = 1/2`, monotone decay to 0 at
 * `+inf`, `zeta(-nu) = -zeta(nu)`.  Non-finite input returns
 * `HS_INVALID_ARGUMENT`.
 *
 * # Safety
 * `out` must be a valid writable pointer.
 */
enum hs_status hs_zeta(double nu, double *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus
