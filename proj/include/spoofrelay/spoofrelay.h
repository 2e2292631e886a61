// Copyright 2026 The spoofrelay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to the spoofrelay library.
 *
 * Every function returns an sr_status; on failure the message is available
 * from sr_last_error() on the calling thread until the next failing call.
 * Handles are opaque and owned by the caller (release with the matching
 * *_destroy; passing NULL to a destroy function is allowed). Strings handed
 * out by a handle stay valid until that handle is destroyed. */

#ifndef SPOOFRELAY_H
#define SPOOFRELAY_H

#include <stddef.h>
#include <stdint.h>

#if defined(SPOOFRELAY_BUILDING_LIBRARY)
#define SR_API __attribute__((visibility("default")))
#else
#define SR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sr_status {
  SR_OK = 0,
  SR_ERR_INVALID_ARGUMENT = 1, /* NULL pointer, index out of range */
  SR_ERR_DOMAIN = 2,           /* value outside the model's domain */
  SR_ERR_CONSTRAINT = 3,       /* control violates the power budget */
  SR_ERR_PARSE = 4,            /* malformed input file */
  SR_ERR_IO = 5,
  SR_ERR_INTERNAL = 6,
  SR_ERR_BUFFER_TOO_SMALL = 7
} sr_status;

typedef enum sr_strategy {
  SR_STRATEGY_CONSTRUCTIVE = 0,
  SR_STRATEGY_JAMMING = 1,
  SR_STRATEGY_DESTRUCTIVE_JAMMING = 2,
  SR_STRATEGY_INFEASIBLE = 3
} sr_strategy;

typedef struct sr_complex {
  double re;
  double im;
} sr_complex;

typedef struct sr_scenario_params {
  sr_complex h_sd;
  sr_complex h_se;
  sr_complex h_ed;
  double p_s;
  double p_e;
  double sigma2;
} sr_scenario_params;

/* Collinear S-E-D placement. sr_geometry_default fills the 1 km, 1.8 GHz,
 * 10 dB, p_e = p_s setup. */
typedef struct sr_geometry {
  double d_sd;
  double d_se;
  double carrier_hz;
  double snr_d_db;
  double pe_over_ps;
  double min_distance_m;
} sr_geometry;

typedef struct sr_solution {
  sr_strategy strategy;
  double rho_star;
  sr_complex v_star;
  double gamma_d;
  double gamma_e;
  double leakage_bps_hz;
  double residual;
  double jam_power;
} sr_solution;

typedef struct sr_sweep_record {
  double d_se;
  double passive_leakage;
  double active_leakage;
  sr_strategy strategy;
  double rho_star;
  double v_mag;
  double jam_power;
} sr_sweep_record;

typedef struct sr_region {
  sr_strategy strategy;
  double d_start;
  double d_end; /* first distance of the next region; last region: its final d */
  size_t first;
  size_t count;
} sr_region;

typedef struct sr_verify_options {
  uint64_t seed;
  size_t n_scenarios;
  size_t n_rho;
  size_t n_mag;
  size_t n_phase;
} sr_verify_options;

typedef struct sr_scenario sr_scenario;
typedef struct sr_sweep sr_sweep;
typedef struct sr_verify_report sr_verify_report;

SR_API const char* sr_version(void);
SR_API const char* sr_last_error(void);
SR_API const char* sr_status_string(sr_status status);
SR_API const char* sr_strategy_name(sr_strategy strategy);

/* Scenarios */
SR_API sr_status sr_scenario_create(const sr_scenario_params* params, sr_scenario** out);
SR_API void sr_geometry_default(sr_geometry* out);
SR_API sr_status sr_scenario_from_geometry(const sr_geometry* geometry, sr_scenario** out);
/* Scenario file or geometry file (JSON or key = value). */
SR_API sr_status sr_scenario_load(const char* path, sr_scenario** out);
SR_API sr_status sr_scenario_params_get(const sr_scenario* scenario,
                                        sr_scenario_params* out);
SR_API void sr_scenario_destroy(sr_scenario* scenario);

SR_API sr_status sr_solve(const sr_scenario* scenario, sr_solution* out);
SR_API sr_status sr_passive_leakage(const sr_scenario* scenario, double* out);
SR_API sr_status sr_effective_snr_d(const sr_scenario* scenario, double rho, sr_complex v,
                                    double* out);

/* Solution as one CSV line without newline. *written receives the length
 * (excluding the terminator) even when the buffer is too small. */
SR_API const char* sr_solution_csv_header(void);
SR_API sr_status sr_solution_csv_row(const sr_solution* solution, char* buffer,
                                     size_t size, size_t* written);

/* Distance sweep */
SR_API sr_status sr_sweep_run_file(const char* config_path, sr_sweep** out);
SR_API sr_status sr_sweep_run(const sr_geometry* geometry, double d_se_start,
                              double d_se_stop, double d_se_step, sr_sweep** out);
SR_API size_t sr_sweep_size(const sr_sweep* sweep);
SR_API sr_status sr_sweep_get_record(const sr_sweep* sweep, size_t index, sr_sweep_record* out);
SR_API size_t sr_sweep_region_count(const sr_sweep* sweep);
SR_API sr_status sr_sweep_get_region(const sr_sweep* sweep, size_t index, sr_region* out);
SR_API sr_status sr_sweep_write_csv(const sr_sweep* sweep, const char* path);
/* Output path from the config file, "" when none was given. */
SR_API const char* sr_sweep_output_path(const sr_sweep* sweep);
SR_API void sr_sweep_destroy(sr_sweep* sweep);

/* Verification suites */
SR_API void sr_verify_options_default(sr_verify_options* out);
SR_API sr_status sr_verify_run(const sr_verify_options* options, sr_verify_report** out);
SR_API int sr_verify_passed(const sr_verify_report* report);
SR_API const char* sr_verify_text(const sr_verify_report* report);
SR_API void sr_verify_destroy(sr_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* SPOOFRELAY_H */
