/*
 * C interface to the goldfish solver library.
 *
 * Objects are opaque handles created by the library and released with the matching
 * *_destroy function. Every fallible call returns a gf_status; on failure the message of
 * the most recent error on the calling thread is available from gf_last_error().
 */
#ifndef GOLDFISH_GOLDFISH_H
#define GOLDFISH_GOLDFISH_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(GOLDFISH_BUILDING_LIBRARY)
#    define GF_API __declspec(dllexport)
#  else
#    define GF_API __declspec(dllimport)
#  endif
#else
#  define GF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gf_status {
  GF_OK = 0,
  /* input / usage failures */
  GF_ERR_INVALID_ARGUMENT = 1,
  GF_ERR_PARSE = 2,
  GF_ERR_VALIDATION = 3,
  GF_ERR_IO = 4,
  GF_ERR_UNSUPPORTED = 5,
  /* numerical failures */
  GF_ERR_COLLISION = 10,
  GF_ERR_CONVERGENCE = 11,
  GF_ERR_TRACKING = 12,
  GF_ERR_INTEGRATION = 13,
  GF_ERR_INTERNAL = 99
} gf_status;

typedef enum gf_method {
  GF_METHOD_SPECTRAL = 0,         /* exact solver: matrix propagation + root tracking */
  GF_METHOD_ODE = 1,              /* direct integration of the N-body equations */
  GF_METHOD_ISOGOLD_ALGEBRAIC = 2, /* classic isochronous goldfish, algebraic solution */
  GF_METHOD_ISOGOLD_ODE = 3        /* classic isochronous goldfish, direct integration */
} gf_method;

typedef enum gf_format { GF_FORMAT_CSV = 0, GF_FORMAT_JSON = 1 } gf_format;

typedef struct gf_config_s* gf_config;
typedef struct gf_trajectory_s* gf_trajectory;
typedef struct gf_catalog_s* gf_catalog;

GF_API const char* gf_last_error(void);
GF_API const char* gf_status_name(gf_status status);
/* Non-zero for collision/convergence/tracking/integration failures. */
GF_API int gf_status_is_numerical(gf_status status);

/* ---- configuration ---- */
GF_API gf_status gf_config_load_file(const char* path, gf_config* out);
GF_API gf_status gf_config_load_string(const char* json, gf_config* out);
GF_API void gf_config_destroy(gf_config config);
GF_API gf_status gf_config_n(gf_config config, int* n);
GF_API gf_status gf_config_omega(gf_config config, double* omega);
GF_API gf_status gf_config_period(gf_config config, double* period);
GF_API gf_status gf_config_t_end(gf_config config, double* t_end);
GF_API gf_status gf_config_samples(gf_config config, int* samples);

/* ---- simulation ---- */
typedef struct gf_simulate_options {
  double t_end;  /* <= 0: use the configuration's t_end */
  int samples;   /* <= 0: use the configuration's samples */
  double rtol;   /* ODE methods only; <= 0: 1e-10 */
  double atol;   /* ODE methods only; <= 0: 1e-12 */
  int literal_m; /* spectral only; non-zero builds M(0) from position differences (diagnostic) */
} gf_simulate_options;

/* Zero-initialised defaults. */
GF_API gf_simulate_options gf_simulate_defaults(void);
GF_API gf_status gf_simulate(gf_config config, gf_method method, const gf_simulate_options* options,
                             gf_trajectory* out);

GF_API void gf_trajectory_destroy(gf_trajectory trajectory);
GF_API gf_status gf_trajectory_shape(gf_trajectory trajectory, size_t* samples, int* bodies);
GF_API gf_status gf_trajectory_time(gf_trajectory trajectory, size_t index, double* t);
GF_API gf_status gf_trajectory_position(gf_trajectory trajectory, size_t index, int label, double* re, double* im);
/* perm receives `bodies` 1-based entries; *present is 0 when the grid does not contain T. */
GF_API gf_status gf_trajectory_closure(gf_trajectory trajectory, int* perm, int* present);
GF_API gf_status gf_trajectory_write(gf_trajectory trajectory, const char* path, gf_format format);
GF_API gf_status gf_trajectory_read_csv(const char* path, gf_trajectory* out);

/* ---- equilibria ---- */
GF_API gf_status gf_equilibria(int n, gf_catalog* out);
GF_API gf_status gf_catalog_read_json(const char* path, gf_catalog* out);
GF_API void gf_catalog_destroy(gf_catalog catalog);
GF_API gf_status gf_catalog_size(gf_catalog catalog, size_t* entries, int* bodies);
/* family: 0 real, 1 imaginary. z receives 2*bodies doubles (re, im interleaved). */
GF_API gf_status gf_catalog_entry(gf_catalog catalog, size_t index, int* family, int* perm, double* residual,
                                  double* z);
GF_API gf_status gf_catalog_write_json(gf_catalog catalog, const char* path);

/* ---- verification ---- */
typedef struct gf_verify_options {
  double tol;     /* <= 0: 1e-5 */
  double t_end;   /* <= 0: configuration's t_end */
  double ode_tol; /* relative tolerance of the ODE run; <= 0: 1e-10 */
} gf_verify_options;

typedef struct gf_verify_report {
  double period;
  double max_deviation;
  double closure_multiset_error;
  int coefficient_order;
  int closure_order;
  double closure_error_kT;
  double psi_residual;
  double max_displacement;
  int passed;
} gf_verify_report;

GF_API gf_status gf_verify(gf_config config, const gf_verify_options* options, gf_verify_report* report);
/* Human-readable text of the last successful gf_verify on this thread. */
GF_API const char* gf_last_verify_summary(void);

/* ---- plotting ---- */
GF_API gf_status gf_plot_trajectory_svg(gf_trajectory trajectory, const char* path, int overlay_equilibria,
                                        int overlay_initial);
GF_API gf_status gf_plot_catalog_svg(gf_catalog catalog, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* GOLDFISH_GOLDFISH_H */
