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


// Randomized cross-checks of the closed forms against the oracles.

#ifndef SPOOFRELAY_VERIFY_HPP
#define SPOOFRELAY_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "spoofrelay/leakage.hpp"
#include "spoofrelay/optimizer.hpp"
#include "spoofrelay/oracle.hpp"

namespace spoofrelay {

// The functions under test. Swapping one for a broken variant is how the
// harness checks itself.
struct ClosedForms {
  std::function<AttackSolution(const Scenario&)> solve;
  std::function<Envelope(const Scenario&, double)> snr_d_max;
  std::function<Envelope(const Scenario&, double)> snr_d_min;
  std::function<double(const Scenario&, const RelayControl&)> effective_snr_d;

  static ClosedForms library();
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t n_scenarios = 100;
  GridSizes grid;
  std::size_t envelope_controls = 10'000;  // random v per sampled rho
  std::size_t envelope_rhos = 8;
  std::size_t mc_pairs = 20;
  std::size_t mc_symbols = 1'000'000;
  double oracle_tolerance = 0.02;  // bps/Hz
  unsigned threads = 0;
};

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string summary;
  // Label, reason and re-loadable scenario text of the first failure.
  std::string counterexample;

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;

  bool passed() const;
  // One PASS/FAIL line per check, then any counterexamples.
  std::string text() const;
};

// Scenario i is random_scenario(seed, i) stratified over the three cases
// (i % 3). Throws DomainError for n_scenarios == 0 or bad grid sizes.
VerifyReport run_verification(const VerifyOptions& opts,
                              const ClosedForms& forms = ClosedForms::library());

}  // namespace spoofrelay

#endif  // SPOOFRELAY_VERIFY_HPP
