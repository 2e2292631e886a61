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

// Optimal spoofing relay attack.
//
// E maximizes the SNR at D subject to being able to decode the resulting rate
// itself (SNR at D <= SNR at E). Fixing rho reduces the choice of v to picking
// a point in [snr_d_min(rho), snr_d_max(rho)], so only rho has to be searched.
// Which envelope is active depends on how |h_se|^2 compares with |h_sd|^2 and
// with the SNR D sees under full-power jamming:
//
//   |h_se|^2 > |h_sd|^2                      constructive forwarding; rho* is
//                                            where snr_d_max meets E's SNR
//   |h_sd|^2/(1+|h_ed|^2 pe) <= |h_se|^2     jamming only, rho* = 0
//                            <= |h_sd|^2
//   |h_se|^2 < |h_sd|^2/(1+|h_ed|^2 pe)      destructive forwarding plus
//                                            jamming; rho* is the smallest
//                                            rho where snr_d_min meets E's
//                                            SNR, or the attack is infeasible

#ifndef SPOOFRELAY_OPTIMIZER_HPP
#define SPOOFRELAY_OPTIMIZER_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "spoofrelay/channel_model.hpp"
#include "spoofrelay/leakage.hpp"

namespace spoofrelay {

enum class StrategyClass {
  ConstructiveForwarding,
  JammingOnly,
  DestructiveForwardingPlusJamming,
  Infeasible,
};

// "constructive", "jamming", "destructive_jamming", "infeasible"
std::string_view to_string(StrategyClass strategy);
std::optional<StrategyClass> strategy_from_string(std::string_view name);

struct AttackSolution {
  StrategyClass strategy = StrategyClass::Infeasible;
  double rho_star = 0.0;
  ComplexGain v_star;
  double gamma_d = 0.0;  // SNR at D under the attack
  double gamma_e = 0.0;  // SNR at E's decoder
  double leakage_bps_hz = 0.0;
  double residual = 0.0;        // gamma_d - gamma_e
  double jam_power_used = 0.0;  // E's transmit power, units of p_e
};

struct SolverOptions {
  std::size_t n_scan = 4096;  // uniform grid for the first-crossing scan
  // Re-derive the destructive crossing from its quartic and require
  // agreement with the scan to 1e-6 in rho (InternalError otherwise).
  bool quartic_cross_check = false;
};

// Boundaries belong to JammingOnly. Never returns Infeasible.
StrategyClass classify_case(const Scenario& s);

AttackSolution solve_case1(const Scenario& s);
AttackSolution solve_case2(const Scenario& s);
AttackSolution solve_case3(const Scenario& s, const SolverOptions& opts = {});

// Validates the scenario and dispatches on classify_case.
AttackSolution solve_attack(const Scenario& s, const SolverOptions& opts = {});

// Roots in [0, 1] of snr_d_min(rho) = eavesdropper_snr(rho), obtained by
// isolating the square root in the full-power branch and squaring. Spurious
// roots introduced by squaring are discarded. Valid for scenarios where the
// destructive branch applies on all of [0, 1] (rho2 = 1), which holds in the
// destructive case.
std::vector<double> destructive_crossings_quartic(const Scenario& s);

}  // namespace spoofrelay

#endif  // SPOOFRELAY_OPTIMIZER_HPP
