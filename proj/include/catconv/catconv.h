/*
 * catconv -- coupled cylinder/wall reaction-diffusion channel solver.
 *
 * C interface over the solver core: opaque handles, integer status codes,
 * and a one-call batch pipeline. All functions are thread-compatible;
 * handles must not be shared across threads without external locking.
 * Error details for the most recent failing call on the current thread are
 * available from catconv_last_error().
 */
#ifndef CATCONV_H
#define CATCONV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CATCONV_API __declspec(dllexport)
#else
#define CATCONV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum catconv_status {
  CATCONV_OK = 0,
  CATCONV_ERR_CONFIG = 2,           /* config missing/invalid; message names keys */
  CATCONV_ERR_NO_CONVERGENCE = 3,   /* fixed-point iteration did not contract */
  CATCONV_ERR_IO = 4,
  CATCONV_ERR_INTERNAL = 5,
  CATCONV_ERR_INVALID_ARGUMENT = 6,
} catconv_status;

/* A validated problem instance built from a run configuration. */
typedef struct catconv_problem catconv_problem;
/* A completed solve: wall + interior fields and the iteration report. */
typedef struct catconv_solution catconv_solution;

CATCONV_API const char* catconv_version(void);
CATCONV_API const char* catconv_status_name(catconv_status status);
/* Message for the last failing call on this thread; empty string if none. */
CATCONV_API const char* catconv_last_error(void);

CATCONV_API catconv_status catconv_problem_from_file(const char* path,
                                                     catconv_problem** out);
CATCONV_API catconv_status catconv_problem_from_string(const char* text,
                                                       catconv_problem** out);
CATCONV_API void catconv_problem_free(catconv_problem* problem);

/* Fixed-point solve of the coupled system at the configured horizon. */
CATCONV_API catconv_status catconv_solve(const catconv_problem* problem,
                                         catconv_solution** out);
CATCONV_API void catconv_solution_free(catconv_solution* solution);

CATCONV_API catconv_status catconv_solution_dims(const catconv_solution* solution,
                                                 int32_t* n_species, int32_t* n_r,
                                                 int32_t* n_z, int32_t* n_t);
/* Wall values for one 1-based species, row-major (z,t); needs n_z*n_t slots. */
CATCONV_API catconv_status catconv_solution_wall_values(
    const catconv_solution* solution, int32_t species, double* buffer,
    size_t buffer_len);
/* Interior values, row-major (r,z,t); needs n_r*n_z*n_t slots. */
CATCONV_API catconv_status catconv_solution_cylinder_values(
    const catconv_solution* solution, int32_t species, double* buffer,
    size_t buffer_len);
/* Iteration report as a JSON document; release with catconv_string_free. */
CATCONV_API catconv_status catconv_solution_report_json(
    const catconv_solution* solution, char** json_out);
CATCONV_API void catconv_string_free(char* s);

typedef struct catconv_run_options {
  int32_t oracle_check;       /* cross-validate against the monolithic solver */
  int32_t audit;              /* energy bound, probe ratios, stability growth */
  int32_t theta_continuation; /* solve along the configured theta sequence */
  int32_t sweep_horizons;     /* contraction-ratio sweep over horizons */
  int32_t export_eigenbasis;  /* dump the spectral basis as CSV */
  int64_t seed;               /* >= 0 overrides the config seed */
} catconv_run_options;

CATCONV_API void catconv_run_options_init(catconv_run_options* options);

/* Parse the config, solve, and write CSV fields plus JSON reports into
 * out_dir. On failure, partially written outputs are removed. *message (if
 * non-NULL) receives a human-readable summary or error text; release it with
 * catconv_string_free. */
CATCONV_API catconv_status catconv_run(const char* config_path,
                                       const char* out_dir,
                                       const catconv_run_options* options,
                                       char** message);

#ifdef __cplusplus
}
#endif

#endif /* CATCONV_H */
