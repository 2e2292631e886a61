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


#include "spoofrelay/spoofrelay.h"

#include <cstdio>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "spoofrelay/error.hpp"
#include "spoofrelay/experiments.hpp"
#include "spoofrelay/leakage.hpp"
#include "spoofrelay/optimizer.hpp"
#include "spoofrelay/scenario_io.hpp"
#include "spoofrelay/verify.hpp"

namespace sr = spoofrelay;

struct sr_scenario {
  sr::Scenario value;
};

struct sr_sweep {
  std::vector<sr::SweepRecord> records;
  std::vector<sr::StrategyRegion> regions;
  std::string output_path;
};

struct sr_verify_report {
  bool passed = false;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

sr_status fail(sr_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Maps the library's exception hierarchy onto status codes.
template <typename F>
sr_status guarded(F&& f) {
  try {
    f();
    return SR_OK;
  } catch (const sr::ConstraintError& e) {
    return fail(SR_ERR_CONSTRAINT, e.what());
  } catch (const sr::DomainError& e) {
    return fail(SR_ERR_DOMAIN, e.what());
  } catch (const sr::ParseError& e) {
    return fail(SR_ERR_PARSE, e.what());
  } catch (const sr::IoError& e) {
    return fail(SR_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SR_ERR_INTERNAL, "unknown error");
  }
}

sr_status null_argument(const char* name) {
  g_last_error = std::string("argument '") + name + "' is NULL";
  return SR_ERR_INVALID_ARGUMENT;
}

sr::ComplexGain to_cpp(sr_complex c) { return {c.re, c.im}; }
sr_complex to_c(sr::ComplexGain c) { return {c.real(), c.imag()}; }

sr_strategy to_c(sr::StrategyClass s) {
  switch (s) {
    case sr::StrategyClass::ConstructiveForwarding: return SR_STRATEGY_CONSTRUCTIVE;
    case sr::StrategyClass::JammingOnly: return SR_STRATEGY_JAMMING;
    case sr::StrategyClass::DestructiveForwardingPlusJamming:
      return SR_STRATEGY_DESTRUCTIVE_JAMMING;
    case sr::StrategyClass::Infeasible: break;
  }
  return SR_STRATEGY_INFEASIBLE;
}

sr::StrategyClass to_cpp(sr_strategy s) {
  switch (s) {
    case SR_STRATEGY_CONSTRUCTIVE: return sr::StrategyClass::ConstructiveForwarding;
    case SR_STRATEGY_JAMMING: return sr::StrategyClass::JammingOnly;
    case SR_STRATEGY_DESTRUCTIVE_JAMMING:
      return sr::StrategyClass::DestructiveForwardingPlusJamming;
    case SR_STRATEGY_INFEASIBLE: break;
  }
  return sr::StrategyClass::Infeasible;
}

sr::GeometryConfig to_cpp(const sr_geometry& g) {
  return sr::GeometryConfig{g.d_sd,       g.d_se,       g.carrier_hz,
                            g.snr_d_db,   g.pe_over_ps, g.min_distance_m};
}

sr::AttackSolution to_cpp(const sr_solution& s) {
  return sr::AttackSolution{to_cpp(s.strategy), s.rho_star,  to_cpp(s.v_star),
                            s.gamma_d,          s.gamma_e,   s.leakage_bps_hz,
                            s.residual,         s.jam_power};
}

sr_sweep* make_sweep(const sr::SweepConfig& cfg) {
  auto sweep = new sr_sweep;
  try {
    sweep->records = sr::run_sweep(cfg);
    sweep->regions = sr::strategy_regions(sweep->records);
    sweep->output_path = cfg.output_path;
  } catch (...) {
    delete sweep;
    throw;
  }
  return sweep;
}

}  // namespace

extern "C" {

const char* sr_version(void) { return "0.1.0"; }

const char* sr_last_error(void) { return g_last_error.c_str(); }

const char* sr_status_string(sr_status status) {
  switch (status) {
    case SR_OK: return "ok";
    case SR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SR_ERR_DOMAIN: return "domain error";
    case SR_ERR_CONSTRAINT: return "constraint violation";
    case SR_ERR_PARSE: return "parse error";
    case SR_ERR_IO: return "I/O error";
    case SR_ERR_INTERNAL: return "internal error";
    case SR_ERR_BUFFER_TOO_SMALL: return "buffer too small";
  }
  return "unknown status";
}

const char* sr_strategy_name(sr_strategy strategy) {
  switch (strategy) {
    case SR_STRATEGY_CONSTRUCTIVE:
    case SR_STRATEGY_JAMMING:
    case SR_STRATEGY_DESTRUCTIVE_JAMMING:
    case SR_STRATEGY_INFEASIBLE:
      return sr::to_string(to_cpp(strategy)).data();
  }
  return "unknown";
}

sr_status sr_scenario_create(const sr_scenario_params* params, sr_scenario** out) {
  if (!params) return null_argument("params");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    sr::Scenario s{to_cpp(params->h_sd), to_cpp(params->h_se), to_cpp(params->h_ed),
                   params->p_s,          params->p_e,          params->sigma2};
    sr::validate(s);
    *out = new sr_scenario{s};
  });
}

void sr_geometry_default(sr_geometry* out) {
  if (!out) return;
  const sr::GeometryConfig g;
  *out = sr_geometry{g.d_sd,     g.d_se,       g.carrier_hz,
                     g.snr_d_db, g.pe_over_ps, g.min_distance_m};
}

sr_status sr_scenario_from_geometry(const sr_geometry* geometry, sr_scenario** out) {
  if (!geometry) return null_argument("geometry");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded(
      [&] { *out = new sr_scenario{sr::build_collinear_scenario(to_cpp(*geometry))}; });
}

sr_status sr_scenario_load(const char* path, sr_scenario** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new sr_scenario{sr::load_scenario_input(path)}; });
}

sr_status sr_scenario_params_get(const sr_scenario* scenario, sr_scenario_params* out) {
  if (!scenario) return null_argument("scenario");
  if (!out) return null_argument("out");
  const sr::Scenario& s = scenario->value;
  *out = sr_scenario_params{to_c(s.h_sd), to_c(s.h_se), to_c(s.h_ed),
                            s.p_s,        s.p_e,        s.sigma2};
  return SR_OK;
}

void sr_scenario_destroy(sr_scenario* scenario) { delete scenario; }

sr_status sr_solve(const sr_scenario* scenario, sr_solution* out) {
  if (!scenario) return null_argument("scenario");
  if (!out) return null_argument("out");
  return guarded([&] {
    const sr::AttackSolution sol = sr::solve_attack(scenario->value);
    *out = sr_solution{to_c(sol.strategy), sol.rho_star,       to_c(sol.v_star),
                       sol.gamma_d,        sol.gamma_e,        sol.leakage_bps_hz,
                       sol.residual,       sol.jam_power_used};
  });
}

sr_status sr_passive_leakage(const sr_scenario* scenario, double* out) {
  if (!scenario) return null_argument("scenario");
  if (!out) return null_argument("out");
  return guarded([&] { *out = sr::passive_leakage(scenario->value); });
}

sr_status sr_effective_snr_d(const sr_scenario* scenario, double rho, sr_complex v,
                             double* out) {
  if (!scenario) return null_argument("scenario");
  if (!out) return null_argument("out");
  return guarded(
      [&] { *out = sr::effective_snr_d(scenario->value, sr::RelayControl{rho, to_cpp(v)}); });
}

const char* sr_solution_csv_header(void) { return sr::kSolutionCsvHeader; }

sr_status sr_solution_csv_row(const sr_solution* solution, char* buffer, size_t size,
                              size_t* written) {
  if (!solution) return null_argument("solution");
  std::string row;
  const sr_status st = guarded([&] { row = sr::solution_csv_row(to_cpp(*solution)); });
  if (st != SR_OK) return st;
  if (written) *written = row.size();
  if (!buffer || size <= row.size()) {
    if (buffer && size > 0) buffer[0] = '\0';
    return fail(SR_ERR_BUFFER_TOO_SMALL, "CSV row does not fit the buffer");
  }
  std::memcpy(buffer, row.c_str(), row.size() + 1);
  return SR_OK;
}

sr_status sr_sweep_run_file(const char* config_path, sr_sweep** out) {
  if (!config_path) return null_argument("config_path");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = make_sweep(sr::load_sweep_config(config_path)); });
}

sr_status sr_sweep_run(const sr_geometry* geometry, double d_se_start, double d_se_stop,
                       double d_se_step, sr_sweep** out) {
  if (!geometry) return null_argument("geometry");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    sr::SweepConfig cfg;
    cfg.geometry = to_cpp(*geometry);
    cfg.d_se_start = d_se_start;
    cfg.d_se_stop = d_se_stop;
    cfg.d_se_step = d_se_step;
    *out = make_sweep(cfg);
  });
}

size_t sr_sweep_size(const sr_sweep* sweep) { return sweep ? sweep->records.size() : 0; }

sr_status sr_sweep_get_record(const sr_sweep* sweep, size_t index, sr_sweep_record* out) {
  if (!sweep) return null_argument("sweep");
  if (!out) return null_argument("out");
  if (index >= sweep->records.size()) {
    return fail(SR_ERR_INVALID_ARGUMENT, "sweep record index out of range");
  }
  const sr::SweepRecord& r = sweep->records[index];
  *out = sr_sweep_record{r.d_se,         r.passive_leakage, r.active_leakage,
                         to_c(r.strategy), r.rho_star,      r.v_mag,
                         r.jam_power};
  return SR_OK;
}

size_t sr_sweep_region_count(const sr_sweep* sweep) {
  return sweep ? sweep->regions.size() : 0;
}

sr_status sr_sweep_get_region(const sr_sweep* sweep, size_t index, sr_region* out) {
  if (!sweep) return null_argument("sweep");
  if (!out) return null_argument("out");
  if (index >= sweep->regions.size()) {
    return fail(SR_ERR_INVALID_ARGUMENT, "region index out of range");
  }
  const sr::StrategyRegion& r = sweep->regions[index];
  *out = sr_region{to_c(r.strategy), r.d_start, r.d_end, r.first, r.count};
  return SR_OK;
}

sr_status sr_sweep_write_csv(const sr_sweep* sweep, const char* path) {
  if (!sweep) return null_argument("sweep");
  if (!path) return null_argument("path");
  return guarded([&] { sr::write_sweep_csv(std::string(path), sweep->records); });
}

const char* sr_sweep_output_path(const sr_sweep* sweep) {
  return sweep ? sweep->output_path.c_str() : "";
}

void sr_sweep_destroy(sr_sweep* sweep) { delete sweep; }

void sr_verify_options_default(sr_verify_options* out) {
  if (!out) return;
  const sr::VerifyOptions d;
  *out = sr_verify_options{d.seed, d.n_scenarios, d.grid.n_rho, d.grid.n_mag,
                           d.grid.n_phase};
}

sr_status sr_verify_run(const sr_verify_options* options, sr_verify_report** out) {
  if (!options) return null_argument("options");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    sr::VerifyOptions opts;
    opts.seed = options->seed;
    opts.n_scenarios = options->n_scenarios;
    opts.grid = sr::GridSizes{options->n_rho, options->n_mag, options->n_phase};
    const sr::VerifyReport report = sr::run_verification(opts);
    *out = new sr_verify_report{report.passed(), report.text()};
  });
}

int sr_verify_passed(const sr_verify_report* report) {
  return report && report->passed ? 1 : 0;
}

const char* sr_verify_text(const sr_verify_report* report) {
  return report ? report->text.c_str() : "";
}

void sr_verify_destroy(sr_verify_report* report) { delete report; }

}  // extern "C"
