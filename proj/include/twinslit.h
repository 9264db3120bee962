/*
 * twinslit: two-double-slit joint interference amplitudes and the
 * permutation-symmetry classification of its events.
 *
 * C interface to the shared library. All functions return TWINSLIT_OK or an
 * error code; twinslit_last_error() carries the message for the most recent
 * failure on the calling thread. Strings returned through `char**` outputs
 * are heap-allocated and must be released with twinslit_string_free().
 */
#ifndef TWINSLIT_H
#define TWINSLIT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(TWINSLIT_BUILD)
#    define TWINSLIT_API __declspec(dllexport)
#  else
#    define TWINSLIT_API __declspec(dllimport)
#  endif
#else
#  define TWINSLIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
    TWINSLIT_OK = 0,
    TWINSLIT_ERR_INVALID_ARGUMENT = 1,
    TWINSLIT_ERR_PARSE = 2,           /* config file or event literal */
    TWINSLIT_ERR_DOMAIN = 3,          /* operation undefined for this input */
    TWINSLIT_ERR_NON_CONVERGENCE = 4, /* quadrature hit the depth cap */
    TWINSLIT_ERR_IO = 5,
    TWINSLIT_ERR_MISMATCH = 6,        /* golden check or verify suite failed */
    TWINSLIT_ERR_INTERNAL = 7
};

typedef struct twinslit_config twinslit_config; /* opaque */
typedef struct twinslit_grid twinslit_grid;     /* opaque */

TWINSLIT_API const char* twinslit_version(void);
TWINSLIT_API const char* twinslit_last_error(void);
TWINSLIT_API void twinslit_string_free(char* s);

/* ---- configuration ---------------------------------------------------- */

/* Lengths in meters, k in 1/m. Validates k,h,l,m > 0 and d >= 0. */
TWINSLIT_API int twinslit_config_create(double k, double h, double l, double m,
                                        double d, twinslit_config** out);
/* Flat `key = value` file; see the library README for the key list. */
TWINSLIT_API int twinslit_config_load(const char* path, twinslit_config** out);
TWINSLIT_API void twinslit_config_free(twinslit_config* cfg);

TWINSLIT_API int twinslit_config_set_u_interval(twinslit_config* cfg,
                                                double u1, double u2);
TWINSLIT_API int twinslit_config_set_grid(twinslit_config* cfg, double y_min,
                                          double y_max, int y_steps,
                                          double z_min, double z_max,
                                          int z_steps);
TWINSLIT_API int twinslit_config_theta(const twinslit_config* cfg, double* out);
TWINSLIT_API int twinslit_config_k_theta_d(const twinslit_config* cfg,
                                           double* out);
/* 1 when h/l <= 0.01 and d/2 <= 0.01*h, else 0. */
TWINSLIT_API int twinslit_config_approximation_valid(const twinslit_config* cfg,
                                                     int* out);

/* ---- optics ------------------------------------------------------------ */

/* method: quadrature | closed | ci | qi | exact. */
TWINSLIT_API int twinslit_amplitude(const twinslit_config* cfg,
                                    const char* method, double y, double z,
                                    double* out);
/* side: east | west; (u,x) is the emission point. */
TWINSLIT_API int twinslit_path_difference_exact(const twinslit_config* cfg,
                                                const char* side, double u,
                                                double x, double screen_coord,
                                                double* out);
TWINSLIT_API int twinslit_path_difference_approx(const twinslit_config* cfg,
                                                 double x, double screen_coord,
                                                 double* out);
/* {"k_theta_d","regime","momentum_ratio","envelope"}; momentum_ratio is the
 * string "infinite" when d == 0. */
TWINSLIT_API int twinslit_regime_json(const twinslit_config* cfg,
                                      char** json_out);

/* Requires a grid block on the config (from file or set_grid). method NULL
 * falls back to the config's method key, then to "closed". */
TWINSLIT_API int twinslit_grid_compute(const twinslit_config* cfg,
                                       const char* method,
                                       twinslit_grid** out);
TWINSLIT_API void twinslit_grid_free(twinslit_grid* grid);
TWINSLIT_API int twinslit_grid_shape(const twinslit_grid* grid, size_t* rows,
                                     size_t* cols);
TWINSLIT_API int twinslit_grid_value(const twinslit_grid* grid, size_t i,
                                     size_t j, double* out);
TWINSLIT_API int twinslit_grid_coords(const twinslit_grid* grid, size_t i,
                                      size_t j, double* y, double* z);
TWINSLIT_API int twinslit_grid_separability_defect(const twinslit_grid* grid,
                                                   double* out);
TWINSLIT_API int twinslit_grid_write_csv(const twinslit_grid* grid,
                                         const char* path);
TWINSLIT_API int twinslit_grid_csv_string(const twinslit_grid* grid,
                                          char** out);
TWINSLIT_API int twinslit_grid_write_json(const twinslit_grid* grid,
                                          const char* path);
TWINSLIT_API int twinslit_grid_json_string(const twinslit_grid* grid,
                                           char** out);

/* ---- events and classification ----------------------------------------- */

/* Event literals accept the short and the expanded form interchangeably,
 * e.g. "X(1,2)+X(2,1)" or "A(1)D(2)+A(2)D(1)". */

/* kind: elementary | combined | even. */
TWINSLIT_API int twinslit_enumerate_json(const char* kind, char** json_out);
TWINSLIT_API int twinslit_event_canonical_json(const char* literal,
                                               char** json_out);
TWINSLIT_API int twinslit_event_symmetries_json(const char* literal,
                                                int exhaustive,
                                                char** json_out);
TWINSLIT_API int twinslit_event_generate_nls_json(const char* literal,
                                                  char** json_out);
TWINSLIT_API int twinslit_event_rotate90_json(const char* literal,
                                              char** json_out);
/* rule: system | absolute; NULL means system. */
TWINSLIT_API int twinslit_event_classify_json(const char* literal,
                                              const char* rule,
                                              char** json_out);
/* mode: classical | bose. */
TWINSLIT_API int twinslit_arrangements_json(const char* mode, char** json_out);

TWINSLIT_API int twinslit_table2_json(const char* rule, char** json_out);
TWINSLIT_API int twinslit_table2_text(const char* rule, char** out);
/* TWINSLIT_OK when the computed table matches the transcription at
 * golden_path record for record; TWINSLIT_ERR_MISMATCH with a line-per-
 * difference report otherwise. */
TWINSLIT_API int twinslit_table2_golden_check(const char* golden_path,
                                              char** report_out);
/* regime: CI | QI | intermediate; configuration: first | second. */
TWINSLIT_API int twinslit_screen_assignment_json(const char* regime,
                                                 const char* configuration,
                                                 char** json_out);

/* ---- verification ------------------------------------------------------ */

/* suite: optics | events | table2 | all. golden_path may be NULL (the golden
 * comparison is then reported as skipped). TWINSLIT_OK when every check
 * passes, TWINSLIT_ERR_MISMATCH otherwise; report_out always carries the
 * line-per-check report. */
TWINSLIT_API int twinslit_verify(const char* suite, const char* golden_path,
                                 char** report_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TWINSLIT_H */
