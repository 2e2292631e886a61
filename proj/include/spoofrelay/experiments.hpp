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

#ifndef SPOOFRELAY_EXPERIMENTS_HPP
#define SPOOFRELAY_EXPERIMENTS_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "spoofrelay/channel_model.hpp"
#include "spoofrelay/optimizer.hpp"

namespace spoofrelay {

// Distance sweep of the eavesdropper along the S-D line. geometry.d_se is
// ignored; the sweep visits d_se_start + i * d_se_step up to d_se_stop.
struct SweepConfig {
  GeometryConfig geometry;
  double d_se_start = 50.0;
  double d_se_stop = 3000.0;
  double d_se_step = 5.0;
  std::string output_path;
};

void validate(const SweepConfig& cfg);

// Points visited by the sweep, in increasing order.
std::vector<double> sweep_distances(const SweepConfig& cfg);

struct SweepRecord {
  double d_se = 0.0;
  double passive_leakage = 0.0;
  double active_leakage = 0.0;
  StrategyClass strategy = StrategyClass::Infeasible;
  double rho_star = 0.0;
  double v_mag = 0.0;
  double jam_power = 0.0;
};

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, const SolverOptions& opts = {});

// Maximal run of equal strategy. The interval is [d_start, d_end) where
// d_end is the first distance of the next region; the last region is closed
// at its final distance.
struct StrategyRegion {
  StrategyClass strategy = StrategyClass::Infeasible;
  double d_start = 0.0;
  double d_end = 0.0;
  std::size_t first = 0;
  std::size_t count = 0;
};

// Throws DomainError on empty input.
std::vector<StrategyRegion> strategy_regions(std::span<const SweepRecord> records);

inline constexpr const char* kSweepCsvHeader =
    "d_se_m,passive_bps_hz,active_bps_hz,strategy,rho_star,v_mag,jam_power";

// Header plus one line per record, numbers with 9 significant digits.
void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);
void write_sweep_csv(const std::string& path, std::span<const SweepRecord> records);

}  // namespace spoofrelay

#endif  // SPOOFRELAY_EXPERIMENTS_HPP
