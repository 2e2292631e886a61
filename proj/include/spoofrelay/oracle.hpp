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

// Ground truth that does not go through the envelope closed forms or the case
// analysis: exhaustive search over (rho, v) using only effective_snr_d and
// eavesdropper_snr, and a symbol-level simulation of the relay link.

#ifndef SPOOFRELAY_ORACLE_HPP
#define SPOOFRELAY_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spoofrelay/channel_model.hpp"
#include "spoofrelay/leakage.hpp"
#include "spoofrelay/optimizer.hpp"
#include "spoofrelay/random.hpp"

namespace spoofrelay {

struct GridSizes {
  std::size_t n_rho = 256;
  std::size_t n_mag = 256;
  std::size_t n_phase = 64;
};

struct OracleResult {
  double leakage_bps_hz = 0.0;
  double rho_hat = 0.0;
  ComplexGain v_hat;
  double gamma_d = 0.0;
  double gamma_e = 0.0;
  // Estimated distance (bps/Hz) between the reported leakage and the true
  // optimum of the continuous problem.
  double resolution_bound = 0.0;
  bool feasible = false;
};

// Grid: rho uniform on [0, 1] (n_rho points), |v| uniform on
// [0, max_amplification(rho)] (n_mag points, so the full-power boundary is
// always on-grid), arg v uniform on [0, 2 pi) (n_phase points).
//
// Within a rho-slice that holds grid points on both sides of the
// decodability boundary, gamma_d is continuous along the segment joining them
// and the segment stays inside the power disk, so the slice optimum equals
// eavesdropper_snr(rho). The oracle realizes it by bisection along that
// segment; the reported control is always a feasible point that was
// evaluated. Ties go to the lowest grid index. threads = 0 picks the
// hardware concurrency; the result does not depend on it.
OracleResult grid_oracle(const Scenario& s, const GridSizes& grid = {},
                         unsigned threads = 0);

// Every grid point as CSV: rho,v_re,v_im,gamma_d,gamma_e,feasible
void write_oracle_grid_csv(const Scenario& s, const GridSizes& grid, std::ostream& out);

struct EnvelopeEstimate {
  double min = 0.0;
  double max = 0.0;
  // Peak-sampling error estimates for each extremum.
  double min_error = 0.0;
  double max_error = 0.0;
};

// Grid extrema of effective_snr_d over feasible v at a fixed rho.
EnvelopeEstimate grid_envelope(const Scenario& s, double rho, std::size_t n_mag,
                               std::size_t n_phase);

// A coefficient drawn uniformly from the disk |v| <= max_amplification(rho).
ComplexGain random_feasible_v(const Scenario& s, double rho, CounterRng& rng);

// effective_snr_d at v = 0 followed by n_samples - 1 random feasible v.
std::vector<double> envelope_samples(const Scenario& s, double rho,
                                     std::size_t n_samples, std::uint64_t seed);

// Simulates n_symbols uses of the relayed link: unit-variance CSCG symbols,
// CSCG relay-processing and receiver noise of variance sigma2. The relay
// output is v (sqrt(rho) h_se sqrt(p_s) d + n_relay) and D receives
// h_sd sqrt(p_s) d + h_ed x_relay + n_d. Returns the signal power (signal
// coefficient squared times the empirical symbol power) over the empirical
// power of everything else in the received samples.
double monte_carlo_snr_d(const Scenario& s, const RelayControl& c,
                         std::size_t n_symbols, std::uint64_t seed);

// 5 sqrt(2 / n): relative agreement required between the simulation and the
// closed-form SNR.
double monte_carlo_tolerance(std::size_t n_symbols);

struct RandomScenarioBounds {
  double gain_min = 1e-3;  // |h|, log-uniform
  double gain_max = 10.0;
  double power_min = 0.1;  // p_s, p_e with sigma2 = 1, log-uniform
  double power_max = 1e3;
};

struct LabeledScenario {
  Scenario scenario;
  std::string label;
};

// Scenario `index` of the stream selected by `seed`. With a target class the
// draw is rejection-sampled until classify_case matches it.
LabeledScenario random_scenario(std::uint64_t seed, std::uint64_t index,
                                std::optional<StrategyClass> target = std::nullopt,
                                const RandomScenarioBounds& bounds = {});

}  // namespace spoofrelay

#endif  // SPOOFRELAY_ORACLE_HPP
