/* Copyright 2026 The spectral_optim Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the spectral_optim library.
 *
 * Every fallible function returns an spo_status. On failure, the output
 * arguments are left untouched and spo_last_error() describes the problem
 * (thread-local, valid until the next failing call on the same thread).
 * Objects returned through out-pointers are owned by the caller and released
 * with the matching *_free function. Strings returned through char** are
 * released with spo_string_free.
 */
#ifndef SPECTRAL_OPTIM_H_
#define SPECTRAL_OPTIM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SPO_BUILDING_LIBRARY)
#define SPO_API __declspec(dllexport)
#else
#define SPO_API __declspec(dllimport)
#endif
#else
#define SPO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct spo_family spo_family;
typedef struct spo_matrix spo_matrix;
typedef struct spo_result spo_result;

typedef enum spo_status {
  SPO_OK = 0,
  SPO_ERR_INVALID_ARGUMENT = 1,
  SPO_ERR_PARSE = 2,
  SPO_ERR_IO = 3,
  SPO_ERR_NOT_CONVERGED = 4,
  SPO_ERR_INFEASIBLE = 5,
  SPO_ERR_UNBOUNDED = 6,
  SPO_ERR_DEGENERATE = 7,
  SPO_ERR_SIZE_LIMIT = 8,
  SPO_ERR_INTERNAL = 9
} spo_status;

typedef enum spo_direction { SPO_MAXIMIZE = 0, SPO_MINIMIZE = 1 } spo_direction;

typedef enum spo_method {
  SPO_METHOD_SIMPLEX = 0, /* smallest-index row rule */
  SPO_METHOD_SIMPLEX_PIVOT = 1,
  SPO_METHOD_GREEDY = 2,
  SPO_METHOD_SELECTIVE_GREEDY = 3
} spo_method;

typedef enum spo_run_status {
  SPO_RUN_OPTIMAL = 0,
  SPO_RUN_BOUND_CERTIFIED = 1,
  SPO_RUN_MAX_ITERS = 2,
  SPO_RUN_REDUCIBLE_DETECTED = 3,
  SPO_RUN_CYCLE_DETECTED = 4
} spo_run_status;

typedef enum spo_family_kind {
  SPO_FAMILY_POSITIVE = 0,
  SPO_FAMILY_SPARSE = 1,
  SPO_FAMILY_POLYHEDRAL = 2
} spo_family_kind;

typedef struct spo_config {
  int direction;       /* spo_direction */
  int method;          /* spo_method */
  double power_eps;    /* power-method stopping tolerance */
  int power_max_iters; /* 0 selects 100*d + 10000 */
  double delta;        /* minimal accepted row improvement */
  double zero_tol;
  int max_outer_iters;
  double reducibility_alpha;
} spo_config;

typedef struct spo_stabilization_info {
  double r_star;
  double rho_x;
  double rho_a;
  double r_lo;
  double r_hi;
  int bisection_steps;
} spo_stabilization_info;

typedef struct spo_bench_spec {
  const size_t* dims;
  size_t n_dims;
  const size_t* sizes;
  size_t n_sizes;
  double density_lo;
  double density_hi;
  int kind; /* spo_family_kind */
  int trials;
  uint64_t seed;
  int direction;
  int method;
  unsigned threads; /* 0: SPECTRAL_OPTIM_THREADS or the core count */
} spo_bench_spec;

SPO_API const char* spo_version(void);
SPO_API const char* spo_last_error(void);
SPO_API const char* spo_status_name(spo_status status);
SPO_API const char* spo_run_status_name(int run_status);
SPO_API void spo_string_free(char* s);

SPO_API void spo_config_default(spo_config* cfg);
SPO_API void spo_bench_spec_default(spo_bench_spec* spec);

/* Families */
SPO_API spo_status spo_family_from_json(const char* json, spo_family** out);
SPO_API spo_status spo_family_load(const char* path, spo_family** out);
SPO_API spo_status spo_family_to_json(const spo_family* f, char** out);
SPO_API spo_status spo_family_save(const spo_family* f, const char* path);
SPO_API spo_status spo_family_random(size_t d, size_t n, double density_lo,
                                     double density_hi, uint64_t seed, int kind,
                                     spo_family** out);
SPO_API spo_status spo_family_graph(const size_t* degrees, size_t d, int direction,
                                    spo_family** out);
SPO_API size_t spo_family_dim(const spo_family* f);
SPO_API void spo_family_free(spo_family* f);

/* Matrices (row-major storage) */
SPO_API spo_status spo_matrix_create(size_t d, const double* entries, spo_matrix** out);
SPO_API spo_status spo_matrix_from_json(const char* json, spo_matrix** out);
SPO_API spo_status spo_matrix_load(const char* path, spo_matrix** out);
SPO_API spo_status spo_matrix_to_json(const spo_matrix* m, char** out);
SPO_API spo_status spo_matrix_save(const spo_matrix* m, const char* path);
SPO_API size_t spo_matrix_dim(const spo_matrix* m);
/* Copies d*d entries into buf; len is the capacity of buf. */
SPO_API spo_status spo_matrix_copy_entries(const spo_matrix* m, double* buf, size_t len);
SPO_API void spo_matrix_free(spo_matrix* m);

/* Selected leading eigenpair. v may be NULL; otherwise it receives d entries. */
SPO_API spo_status spo_eigenpair(const spo_matrix* m, double eps, double* rho, double* v);

/* Optimization */
SPO_API spo_status spo_optimize(const spo_family* f, const spo_config* cfg,
                                spo_result** out);
SPO_API spo_status spo_optimize_from(const spo_family* f, const spo_config* cfg,
                                     const spo_matrix* start, spo_result** out);
SPO_API spo_status spo_graph(const size_t* degrees, size_t d, const spo_config* cfg,
                             spo_result** out);
SPO_API spo_status spo_demo_cycling(const spo_config* cfg, spo_result** adversarial,
                                    spo_result** selective);

SPO_API double spo_result_rho(const spo_result* r);
SPO_API int spo_result_status(const spo_result* r);
SPO_API int spo_result_iterations(const spo_result* r);
SPO_API int spo_result_direction(const spo_result* r);
SPO_API void spo_result_bounds(const spo_result* r, double* t_bound, double* s_bound);
/* Returns 1 and fills both values when the reducibility remedy ran. */
SPO_API int spo_result_reducibility(const spo_result* r, double* unperturbed_rho,
                                    double* perturbed_rho);
SPO_API spo_status spo_result_matrix(const spo_result* r, spo_matrix** out);
SPO_API spo_status spo_result_eigenvector(const spo_result* r, double* v, size_t len);
SPO_API size_t spo_result_trace_length(const spo_result* r);
SPO_API spo_status spo_result_trace_csv(const spo_result* r, char** out);
SPO_API spo_status spo_result_to_json(const spo_result* r, char** out);
SPO_API void spo_result_free(spo_result* r);

/* Stabilization in the entrywise max-row-sum norm. */
SPO_API spo_status spo_closest_stable(const spo_matrix* a, double target, double r_tol,
                                      const spo_config* cfg, spo_matrix** x,
                                      spo_stabilization_info* info);
SPO_API spo_status spo_closest_unstable(const spo_matrix* a, double target, double r_tol,
                                        const spo_config* cfg, spo_matrix** x,
                                        spo_stabilization_info* info);

/* Benchmark; either output may be NULL. */
SPO_API spo_status spo_benchmark(const spo_bench_spec* spec, char** text, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* SPECTRAL_OPTIM_H_ */
