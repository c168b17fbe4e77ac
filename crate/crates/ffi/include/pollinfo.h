#ifndef POLLINFO_H
#define POLLINFO_H

/* Generated by cbindgen from the pollinfo-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code for every fallible entry point.
 */
typedef enum PollinfoStatus {
  /**
   * Success.
   */
  POLLINFO_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  POLLINFO_STATUS_NULL_ARGUMENT = 1,
  /**
   * A configuration value was rejected (base, exponents, tolerance).
   */
  POLLINFO_STATUS_INVALID_CONFIG = 2,
  /**
   * The probability array was rejected (length, range, normalization).
   */
  POLLINFO_STATUS_INVALID_DISTRIBUTION = 3,
  /**
   * The CSV input failed to parse or a row failed ingestion.
   */
  POLLINFO_STATUS_PARSE_FAILED = 4,
  /**
   * Measure evaluation failed (singular value under the error policy,
   * or an internal invariant violation).
   */
  POLLINFO_STATUS_COMPUTE_FAILED = 5,
  /**
   * A string argument was not valid UTF-8.
   */
  POLLINFO_STATUS_INVALID_UTF8 = 6,
} PollinfoStatus;

/**
 * Opaque analysis configuration.
 */
typedef struct PollinfoConfig PollinfoConfig;

/**
 * The full measure battery for one distribution.
 */
typedef struct PollinfoMeasures {
  /**
   * Shannon entropy S in units of the configured base.
   */
  double entropy;
  /**
   * S_max = log n.
   */
  double max_entropy;
  /**
   * I = 1/S; +INFINITY when saturated.
   */
  double information;
  /**
   * Disorder = S/S_max.
   */
  double disorder;
  /**
   * Order = 1 - disorder.
   */
  double order;
  /**
   * SDL complexity disorder^alpha * order^beta.
   */
  double sdl;
  /**
   * Disequilibrium D.
   */
  double disequilibrium;
  /**
   * LMC complexity C = S * D.
   */
  double lmc;
  /**
   * Discrete Fisher information; +INFINITY when saturated.
   */
  double fisher;
} PollinfoMeasures;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Allocates a configuration with the defaults: base 10, alpha = beta = 1,
 * row tolerance 5.0, saturate on division by zero.
 */
struct PollinfoConfig *pollinfo_config_new(void);

/**
 * Releases a configuration. Null is a no-op.
 *
 * # Safety
 * `config` must be null or a pointer from [`pollinfo_config_new`] not
 * yet freed.
 */
void pollinfo_config_free(struct PollinfoConfig *config);

/**
 * Sets the entropy logarithm base (must be finite and > 1).
 *
 * # Safety
 * `config` must be a live pointer from [`pollinfo_config_new`].
 */
enum PollinfoStatus pollinfo_config_set_base(struct PollinfoConfig *config, double base);

/**
 * Sets the SDL exponents (each must be finite and >= 0).
 *
 * # Safety
 * `config` must be a live pointer from [`pollinfo_config_new`].
 */
enum PollinfoStatus pollinfo_config_set_exponents(struct PollinfoConfig *config,
                                                  double alpha,
                                                  double beta);

/**
 * Sets the allowed deviation of a raw percentage row's sum from 100.
 *
 * # Safety
 * `config` must be a live pointer from [`pollinfo_config_new`].
 */
enum PollinfoStatus pollinfo_config_set_tolerance(struct PollinfoConfig *config, double tolerance);

/**
 * Chooses the division-by-zero policy: saturate to +INFINITY (true,
 * the default) or fail with `ComputeFailed` (false).
 *
 * # Safety
 * `config` must be a live pointer from [`pollinfo_config_new`].
 */
enum PollinfoStatus pollinfo_config_set_saturate(struct PollinfoConfig *config, bool saturate);

/**
 * Evaluates the measure battery on `probs[0..len]`, which must hold
 * probabilities in [0, 1] summing to 1 within 1e-9, with 2 <= len <= 64.
 *
 * # Safety
 * `probs` must point to `len` readable doubles and `out` to writable
 * storage for one [`PollinfoMeasures`]; `config` must be null or live.
 */
enum PollinfoStatus pollinfo_measures_compute(const double *probs,
                                              size_t len,
                                              const struct PollinfoConfig *config,
                                              struct PollinfoMeasures *out);

/**
 * Parses poll CSV text, evaluates the measure series, and returns the
 * report JSON through `out_json`.
 *
 * The returned string must be released with [`pollinfo_string_free`].
 *
 * # Safety
 * `csv` and `question_id` must be null-terminated strings; `out_json`
 * must be writable; `config` must be null or live.
 */
enum PollinfoStatus pollinfo_analyze_csv(const char *csv,
                                         const char *question_id,
                                         const struct PollinfoConfig *config,
                                         char **out_json);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `text` must be null or a pointer produced by this library and not
 * yet freed.
 */
void pollinfo_string_free(char *text);

/**
 * Library version as a static string; do not free.
 */
const char *pollinfo_version(void);

/**
 * Static description of a status code; do not free.
 */
const char *pollinfo_status_message(enum PollinfoStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLLINFO_H */
