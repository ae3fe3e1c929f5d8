#ifndef PROPLAB_H
#define PROPLAB_H

/* Generated by cbindgen from proplab-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Okumura environment class.
 */
typedef enum ProplabEnvironment {
  PROPLAB_ENVIRONMENT_OPEN = 0,
  PROPLAB_ENVIRONMENT_SUBURBAN = 1,
  PROPLAB_ENVIRONMENT_URBAN = 2,
} ProplabEnvironment;

/**
 * Path loss model selector.
 */
typedef enum ProplabModel {
  PROPLAB_MODEL_FREE_SPACE = 0,
  PROPLAB_MODEL_LOG_DISTANCE = 1,
  PROPLAB_MODEL_OKUMURA = 2,
  PROPLAB_MODEL_HATA = 3,
  PROPLAB_MODEL_LEE = 4,
} ProplabModel;

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum ProplabStatus {
  PROPLAB_STATUS_OK = 0,
  /**
   * A null pointer was passed where a value is required.
   */
  PROPLAB_STATUS_NULL_POINTER = 1,
  /**
   * A parameter is invalid (non-positive, bad enum value, bad UTF-8).
   */
  PROPLAB_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A parameter is outside the model's validity range (strict mode).
   */
  PROPLAB_STATUS_OUT_OF_RANGE = 3,
  /**
   * The link budget cannot be met even at the minimum valid distance.
   */
  PROPLAB_STATUS_NO_COVERAGE = 4,
  /**
   * The curve file failed to parse or violated a table invariant.
   */
  PROPLAB_STATUS_PARSE_ERROR = 5,
} ProplabStatus;

/**
 * Opaque handle to a validated Okumura curve table.
 */
typedef struct ProplabCurves ProplabCurves;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * A static description of a status code.
 */
const char *proplab_status_message(enum ProplabStatus status);

/**
 * New handle to the built-in default curve table. Never fails.
 * Release with `proplab_curves_free`.
 */
struct ProplabCurves *proplab_curves_default(void);

/**
 * Parse a curve table from a NUL-terminated string in the curve-file
 * format. On success writes a new handle to `out`.
 *
 * # Safety
 * `text` must point to a valid NUL-terminated string and `out` must be a
 * valid pointer.
 */
enum ProplabStatus proplab_curves_parse(const char *text, struct ProplabCurves **out);

/**
 * Release a curve table handle. Passing NULL is a no-op.
 *
 * # Safety
 * `curves` must be a handle previously returned by this library and not
 * yet freed.
 */
void proplab_curves_free(struct ProplabCurves *curves);

/**
 * Free-space path loss in dB.
 *
 * # Safety
 * `out_db` must be a valid pointer.
 */
enum ProplabStatus proplab_free_space_loss(double freq_mhz, double distance_km, double *out_db);

/**
 * Log-distance path loss in dB with a free-space reference at
 * `ref_distance_km`.
 *
 * # Safety
 * `out_db` must be a valid pointer.
 */
enum ProplabStatus proplab_log_distance_loss(double freq_mhz,
                                             double distance_km,
                                             double exponent,
                                             double ref_distance_km,
                                             double *out_db);

/**
 * Okumura median path loss in dB. `out_flagged` (optional) is set when a
 * permissive-mode evaluation left the validity window.
 *
 * # Safety
 * `curves` must be a live handle; `out_db` must be valid; `out_flagged`
 * may be NULL.
 */
enum ProplabStatus proplab_okumura_loss(const struct ProplabCurves *curves,
                                        double freq_mhz,
                                        double distance_km,
                                        double bts_height_m,
                                        double ms_height_m,
                                        enum ProplabEnvironment env,
                                        bool permissive,
                                        double *out_db,
                                        bool *out_flagged);

/**
 * Hata urban median path loss in dB (large-city correction).
 *
 * # Safety
 * `out_db` must be valid; `out_flagged` may be NULL.
 */
enum ProplabStatus proplab_hata_loss(double freq_mhz,
                                     double distance_km,
                                     double bts_height_m,
                                     double ms_height_m,
                                     bool permissive,
                                     double *out_db,
                                     bool *out_flagged);

/**
 * Lee path loss in dB with nominal-exact alpha4 calibration (pass
 * `alpha4_literal` for the as-printed 10^(Gb/10)/4 form).
 *
 * # Safety
 * `out_db` must be a valid pointer.
 */
enum ProplabStatus proplab_lee_loss(double freq_mhz,
                                    double distance_km,
                                    double bts_height_m,
                                    double ms_height_m,
                                    double tx_power_w,
                                    double bts_gain_db,
                                    bool alpha4_literal,
                                    double *out_db);

/**
 * Largest distance (km) whose loss stays within `max_loss_db`.
 * `out_saturated` (optional) is set when the whole validity range fits the
 * budget and the model's maximum distance is returned.
 *
 * # Safety
 * `curves` must be a live handle; `out_km` must be valid; `out_saturated`
 * may be NULL.
 */
enum ProplabStatus proplab_max_radius(const struct ProplabCurves *curves,
                                      enum ProplabModel model,
                                      double freq_mhz,
                                      double bts_height_m,
                                      double ms_height_m,
                                      enum ProplabEnvironment env,
                                      double max_loss_db,
                                      bool permissive,
                                      double *out_km,
                                      bool *out_saturated);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PROPLAB_H */
