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


// spoofrelay command-line front end. Talks to the library only through the
// C interface.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "spoofrelay/spoofrelay.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int report_error(sr_status status) {
  std::fprintf(stderr, "error: %s: %s\n", sr_status_string(status), sr_last_error());
  return kExitFailure;
}

int usage_error(const std::string& message) {
  std::fprintf(stderr, "usage error: %s\n", message.c_str());
  return kExitUsage;
}

std::string csv_row(const sr_solution& sol) {
  std::string row(256, '\0');
  size_t n = 0;
  if (sr_solution_csv_row(&sol, row.data(), row.size(), &n) == SR_ERR_BUFFER_TOO_SMALL) {
    row.assign(n + 1, '\0');
    sr_solution_csv_row(&sol, row.data(), row.size(), &n);
  }
  row.resize(n);
  return row;
}

int cmd_solve(const std::string& scenario_path, const std::string& out_path) {
  sr_scenario* scenario = nullptr;
  if (sr_status st = sr_scenario_load(scenario_path.c_str(), &scenario); st != SR_OK) {
    return report_error(st);
  }
  sr_solution sol{};
  const sr_status st = sr_solve(scenario, &sol);
  sr_scenario_destroy(scenario);
  if (st != SR_OK) return report_error(st);

  const std::string row = csv_row(sol);
  const double v_mag = std::hypot(sol.v_star.re, sol.v_star.im);
  double phase = v_mag == 0.0 ? 0.0 : std::atan2(sol.v_star.im, sol.v_star.re);
  if (phase <= -M_PI) phase = M_PI;
  std::printf("strategy:       %s\n", sr_strategy_name(sol.strategy));
  std::printf("rho_star:       %.12g\n", sol.rho_star);
  std::printf("v_mag:          %.12g\n", v_mag);
  std::printf("v_phase_rad:    %.12g\n", phase);
  std::printf("gamma_d:        %.12g\n", sol.gamma_d);
  std::printf("gamma_e:        %.12g\n", sol.gamma_e);
  std::printf("leakage_bps_hz: %.12g\n", sol.leakage_bps_hz);
  std::printf("residual:       %.3g\n", sol.residual);
  std::printf("jam_power:      %.12g\n", sol.jam_power);
  std::printf("\n%s\n%s\n", sr_solution_csv_header(), row.c_str());

  if (!out_path.empty()) {
    std::FILE* f = std::fopen(out_path.c_str(), "w");
    if (!f) {
      std::fprintf(stderr, "error: cannot open '%s' for writing\n", out_path.c_str());
      return kExitFailure;
    }
    std::fprintf(f, "%s\n%s\n", sr_solution_csv_header(), row.c_str());
    if (std::fclose(f) != 0) {
      std::fprintf(stderr, "error: failed writing '%s'\n", out_path.c_str());
      return kExitFailure;
    }
  }
  return 0;
}

int cmd_sweep(const std::string& config_path, std::string out_path) {
  sr_sweep* sweep = nullptr;
  if (sr_status st = sr_sweep_run_file(config_path.c_str(), &sweep); st != SR_OK) {
    return report_error(st);
  }
  if (out_path.empty()) out_path = sr_sweep_output_path(sweep);
  if (out_path.empty()) {
    sr_sweep_destroy(sweep);
    return usage_error("sweep needs --out or an 'out' entry in the config");
  }

  const size_t n = sr_sweep_size(sweep);
  sr_sweep_record best{};
  size_t violations = 0;
  for (size_t i = 0; i < n; ++i) {
    sr_sweep_record r{};
    sr_sweep_get_record(sweep, i, &r);
    if (i == 0 || r.active_leakage > best.active_leakage) best = r;
    if (r.active_leakage < r.passive_leakage - 1e-12) ++violations;
  }

  std::printf("points: %zu\nregions:\n", n);
  for (size_t i = 0; i < sr_sweep_region_count(sweep); ++i) {
    sr_region r{};
    sr_sweep_get_region(sweep, i, &r);
    const bool last = i + 1 == sr_sweep_region_count(sweep);
    std::printf("  %-20s [%g, %g%c m  %zu points\n", sr_strategy_name(r.strategy),
                r.d_start, r.d_end, last ? ']' : ')', r.count);
  }
  std::printf("max active leakage: %.9g bps/Hz at d_se = %g m\n", best.active_leakage,
              best.d_se);
  std::printf("dominance violations: %zu\n", violations);

  const sr_status st = sr_sweep_write_csv(sweep, out_path.c_str());
  sr_sweep_destroy(sweep);
  if (st != SR_OK) return report_error(st);
  std::printf("wrote %s\n", out_path.c_str());
  return 0;
}

int cmd_verify(std::uint64_t seed, long long n_scenarios, const std::vector<long long>& grid) {
  if (n_scenarios < 1) return usage_error("--scenarios must be at least 1");
  if (grid.size() != 3) return usage_error("--grid takes n_rho,n_mag,n_phase");
  for (long long g : grid) {
    if (g < 2) return usage_error("--grid sizes must all be at least 2");
  }
  sr_verify_options opts{};
  sr_verify_options_default(&opts);
  opts.seed = seed;
  opts.n_scenarios = static_cast<size_t>(n_scenarios);
  opts.n_rho = static_cast<size_t>(grid[0]);
  opts.n_mag = static_cast<size_t>(grid[1]);
  opts.n_phase = static_cast<size_t>(grid[2]);

  sr_verify_report* report = nullptr;
  if (sr_status st = sr_verify_run(&opts, &report); st != SR_OK) return report_error(st);
  std::fputs(sr_verify_text(report), stdout);
  const bool passed = sr_verify_passed(report) != 0;
  sr_verify_destroy(report);
  return passed ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spoofing relay attack: optimal eavesdropper strategy and leakage"};
  app.set_version_flag("--version", sr_version());
  app.require_subcommand(1);

  std::string scenario_path, solve_out;
  CLI::App* solve = app.add_subcommand("solve", "Solve one scenario");
  solve->add_option("--scenario", scenario_path, "Scenario or geometry file")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--out", solve_out, "Also write the CSV record here");

  std::string config_path, sweep_out;
  CLI::App* sweep = app.add_subcommand("sweep", "Run the eavesdropper distance sweep");
  sweep->add_option("--config", config_path, "Sweep configuration file")
      ->required()
      ->check(CLI::ExistingFile);
  sweep->add_option("--out", sweep_out, "CSV output path (overrides the config)");

  std::uint64_t seed = 42;
  long long n_scenarios = 100;
  std::vector<long long> grid{256, 256, 64};
  CLI::App* verify = app.add_subcommand("verify", "Check closed forms against oracles");
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_option("--scenarios", n_scenarios, "Number of random scenarios")
      ->capture_default_str();
  verify->add_option("--grid", grid, "Oracle grid n_rho,n_mag,n_phase")
      ->delimiter(',')
      ->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*solve) return cmd_solve(scenario_path, solve_out);
  if (*sweep) return cmd_sweep(config_path, sweep_out);
  return cmd_verify(seed, n_scenarios, grid);
}
