#ifndef SPINHOM_H
#define SPINHOM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SpinhomStatus {
  SPINHOM_STATUS_OK = 0,
  SPINHOM_STATUS_NULL_POINTER = 1,
  SPINHOM_STATUS_INVALID_ARGUMENT = 2,
  SPINHOM_STATUS_MODEL = 3,
  SPINHOM_STATUS_RANGE = 4,
  SPINHOM_STATUS_PLAN_CONFLICT = 5,
  SPINHOM_STATUS_CONFIG = 6,
  SPINHOM_STATUS_IO = 7,
  SPINHOM_STATUS_PANIC = 8,
} SpinhomStatus;

typedef enum SpinhomDriveMode {
  // Carrier at the path-averaged splitting.
  SPINHOM_DRIVE_MODE_PATH_MEAN = 0,
  // Carrier at the device-average splitting.
  SPINHOM_DRIVE_MODE_DEVICE_MEAN = 1,
} SpinhomDriveMode;

// Opaque g-factor landscape.
typedef struct SpinhomLandscape SpinhomLandscape;

// Opaque sweep result.
typedef struct SpinhomSweep SpinhomSweep;

// Closed-form design point; SI units, frequencies in rad/s.
typedef struct SpinhomEstimate {
  double d_min_m;
  double v_min_mps;
  double g_min_b0;
  double sigma_at_d;
  double i1;
  double i2;
} SpinhomEstimate;

typedef struct SpinhomPointSummary {
  // Successful trials.
  size_t n;
  size_t failures;
  double mean;
  double std;
  double p50;
  double p95;
} SpinhomPointSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Valid until the
// next failing call on the same thread.
const char *spinhom_last_error(void);

// Static, NUL-terminated version string.
const char *spinhom_version(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must come from this library and not have been freed.
void spinhom_string_free(char *s);

// Samples an Ornstein-Uhlenbeck landscape (`g0 = 2`, λ = 20 nm, 1 nm grid)
// of `length_m` metres.
//
// # Safety
// `out` must be a valid pointer.
enum SpinhomStatus spinhom_landscape_new(double delta_g_rel,
                                         double length_m,
                                         uint64_t seed,
                                         bool periodic,
                                         struct SpinhomLandscape **out);

// # Safety
// `h` must be null or a handle from [`spinhom_landscape_new`].
void spinhom_landscape_free(struct SpinhomLandscape *h);

// Number of grid samples.
//
// # Safety
// `h` must be a live landscape handle.
size_t spinhom_landscape_len(const struct SpinhomLandscape *h);

// Copies up to `cap` raw samples into `buf` and returns how many were written.
//
// # Safety
// `h` must be a live handle and `buf` must hold `cap` doubles.
size_t spinhom_landscape_samples(const struct SpinhomLandscape *h, double *buf, size_t cap);

// Dot-averaged g at position `x_m`.
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum SpinhomStatus spinhom_landscape_dot_average(const struct SpinhomLandscape *h,
                                                 double x_m,
                                                 double *out);

// Exchange X⊗X infidelity for `J/Ω` (rounded to an even integer), `ω12/Ω`
// and Ω in rad/s.
//
// # Safety
// `out` must be a valid pointer.
enum SpinhomStatus spinhom_exchange_infidelity(double j_over_omega,
                                               double omega12_over_omega,
                                               double rabi,
                                               double *out);

// Tunnel-coupled X infidelity with `t_c = 2 p Ω`; frequencies in rad/s.
//
// # Safety
// `out` must be a valid pointer.
enum SpinhomStatus spinhom_tunnel_infidelity(double omega12, double rabi, uint32_t p, double *out);

// X infidelity of a spin shuttled back and forth over `d_m` at `v_mps`,
// centred at `centre_m` on the landscape.
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum SpinhomStatus spinhom_shuttle_infidelity(const struct SpinhomLandscape *h,
                                              double d_m,
                                              double v_mps,
                                              double centre_m,
                                              double rabi,
                                              double b0_tesla,
                                              enum SpinhomDriveMode mode,
                                              double *out);

// # Safety
// `out` must be a valid pointer.
enum SpinhomStatus spinhom_estimate(double delta_g,
                                    double b0_tesla,
                                    double rabi,
                                    double lambda_m,
                                    double target_infidelity,
                                    double quantile_factor,
                                    struct SpinhomEstimate *out);

// Runs a sweep given as JSON (`simulator`, `axes`, `fixed`,
// `trials_per_point`, `base_seed`). `workers = 0` uses all cores.
//
// # Safety
// `spec_json` must be a NUL-terminated string and `out` a valid pointer.
enum SpinhomStatus spinhom_sweep_run(const char *spec_json,
                                     size_t workers,
                                     struct SpinhomSweep **out);

// # Safety
// `h` must be null or a handle from [`spinhom_sweep_run`].
void spinhom_sweep_free(struct SpinhomSweep *h);

// # Safety
// `h` must be a live sweep handle.
size_t spinhom_sweep_n_points(const struct SpinhomSweep *h);

// Statistics of grid point `index`. A point where every trial failed
// reports `n = 0` and NaN statistics.
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum SpinhomStatus spinhom_sweep_point(const struct SpinhomSweep *h,
                                       size_t index,
                                       struct SpinhomPointSummary *out);

// Full result as JSON; free with [`spinhom_string_free`].
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum SpinhomStatus spinhom_sweep_to_json(const struct SpinhomSweep *h, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPINHOM_H */
