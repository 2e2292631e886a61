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

#include "spoofrelay/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "spoofrelay/error.hpp"
#include "spoofrelay/leakage.hpp"

namespace spoofrelay {

void validate(const SweepConfig& cfg) {
  GeometryConfig g = cfg.geometry;
  g.d_se = cfg.d_se_start > 0.0 ? cfg.d_se_start : 1.0;
  validate(g);
  if (!(std::isfinite(cfg.d_se_start) && cfg.d_se_start > 0.0)) {
    throw DomainError("sweep: d_se_start must be > 0");
  }
  if (!(std::isfinite(cfg.d_se_stop) && cfg.d_se_start < cfg.d_se_stop)) {
    throw DomainError("sweep: d_se_start must be < d_se_stop");
  }
  if (!(std::isfinite(cfg.d_se_step) && cfg.d_se_step > 0.0)) {
    throw DomainError("sweep: d_se_step must be > 0");
  }
  if (cfg.d_se_start + cfg.d_se_step > cfg.d_se_stop * (1.0 + 1e-12)) {
    throw DomainError("sweep: range must contain at least 2 points");
  }
}

std::vector<double> sweep_distances(const SweepConfig& cfg) {
  validate(cfg);
  // Index-based to keep accumulated rounding out of the distances; the
  // small slack keeps an endpoint that lands exactly on the grid.
  const auto n = static_cast<std::size_t>(
      std::floor((cfg.d_se_stop - cfg.d_se_start) / cfg.d_se_step + 1e-9)) + 1;
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = cfg.d_se_start + static_cast<double>(i) * cfg.d_se_step;
  }
  return d;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, const SolverOptions& opts) {
  std::vector<SweepRecord> records;
  for (double d_se : sweep_distances(cfg)) {
    GeometryConfig g = cfg.geometry;
    g.d_se = d_se;
    const Scenario s = build_collinear_scenario(g);
    const AttackSolution sol = solve_attack(s, opts);
    records.push_back(SweepRecord{d_se, passive_leakage(s), sol.leakage_bps_hz,
                                  sol.strategy, sol.rho_star, std::abs(sol.v_star),
                                  sol.jam_power_used});
  }
  return records;
}

std::vector<StrategyRegion> strategy_regions(std::span<const SweepRecord> records) {
  if (records.empty()) throw DomainError("strategy_regions: no records");
  std::vector<StrategyRegion> regions;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (regions.empty() || regions.back().strategy != records[i].strategy) {
      if (!regions.empty()) regions.back().d_end = records[i].d_se;
      regions.push_back(StrategyRegion{records[i].strategy, records[i].d_se,
                                       records[i].d_se, i, 0});
    }
    regions.back().count += 1;
  }
  regions.back().d_end = records.back().d_se;
  return regions;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << kSweepCsvHeader << '\n';
  char line[512];
  for (const SweepRecord& r : records) {
    std::snprintf(line, sizeof line, "%.9g,%.9g,%.9g,%s,%.9g,%.9g,%.9g\n", r.d_se,
                  r.passive_leakage, r.active_leakage, to_string(r.strategy).data(),
                  r.rho_star, r.v_mag, r.jam_power);
    out << line;
  }
}

void write_sweep_csv(const std::string& path, std::span<const SweepRecord> records) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write_sweep_csv(file, records);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace spoofrelay
