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


#include "spoofrelay/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "spoofrelay/error.hpp"
#include "spoofrelay/leakage.hpp"
#include "test_util.hpp"

namespace spoofrelay {
namespace {

using testing::powers_scenario;

constexpr double kLog2Of6 = 2.584962500721156;
constexpr double kLog2Of11 = 3.4594316186372973;

TEST(GridOracle, RejectsDegenerateGrids) {
  const Scenario s = powers_scenario(1, 0.5, 1, 10, 10);
  EXPECT_THROW(grid_oracle(s, GridSizes{1, 8, 8}), DomainError);
  EXPECT_THROW(grid_oracle(s, GridSizes{8, 1, 8}), DomainError);
  EXPECT_THROW(grid_oracle(s, GridSizes{8, 8, 0}), DomainError);
}

TEST(GridOracle, JammingFixtureConverges) {
  const Scenario s = powers_scenario(1, 0.5, 1, 10, 10);
  double prev_error = 1e9;
  for (std::size_t n : {16u, 64u, 256u}) {
    const OracleResult o = grid_oracle(s, GridSizes{n, n, 64});
    ASSERT_TRUE(o.feasible);
    const double err = std::abs(o.leakage_bps_hz - kLog2Of6);
    EXPECT_LE(err, o.resolution_bound + 1e-12);
    EXPECT_LE(err, prev_error + 1e-12);
    prev_error = err;
  }
  EXPECT_LT(prev_error, 1e-3);
}

TEST(GridOracle, NoRelayPathSubCase) {
  const OracleResult o = grid_oracle(powers_scenario(1, 4, 0, 10, 10));
  EXPECT_NEAR(o.leakage_bps_hz, kLog2Of11, 1e-6);
}

TEST(GridOracle, ReportedControlIsFeasible) {
  for (int i = 0; i < 12; ++i) {
    const Scenario s = random_scenario(17, i).scenario;
    const OracleResult o = grid_oracle(s, GridSizes{64, 64, 32});
    if (!o.feasible) continue;
    const RelayControl c{o.rho_hat, o.v_hat};
    EXPECT_LE(relay_power_used(s, c), s.p_e * (1.0 + 1e-9));
    const double gd = effective_snr_d(s, c);
    EXPECT_DOUBLE_EQ(gd, o.gamma_d);
    EXPECT_LE(gd, eavesdropper_snr(s, o.rho_hat));
    EXPECT_DOUBLE_EQ(o.leakage_bps_hz, rate_from_snr(gd));
  }
}

TEST(GridOracle, NeverBeatsClosedFormBeyondBound) {
  for (int i = 0; i < 30; ++i) {
    const LabeledScenario ls = random_scenario(18, i);
    SCOPED_TRACE(ls.label);
    const OracleResult o = grid_oracle(ls.scenario, GridSizes{128, 128, 48});
    const AttackSolution sol = solve_attack(ls.scenario);
    EXPECT_LE(o.leakage_bps_hz, sol.leakage_bps_hz + o.resolution_bound + 1e-9);
  }
}

TEST(GridOracle, ThreadCountDoesNotChangeResult) {
  const Scenario s = random_scenario(19, 3).scenario;
  const GridSizes g{48, 40, 24};
  const OracleResult a = grid_oracle(s, g, 1);
  for (unsigned t : {2u, 3u, 7u}) {
    const OracleResult b = grid_oracle(s, g, t);
    EXPECT_EQ(a.leakage_bps_hz, b.leakage_bps_hz);
    EXPECT_EQ(a.rho_hat, b.rho_hat);
    EXPECT_EQ(a.v_hat, b.v_hat);
    EXPECT_EQ(a.resolution_bound, b.resolution_bound);
  }
}

TEST(GridOracle, InfeasibleScenarioHasNoLeakage) {
  const OracleResult o = grid_oracle(powers_scenario(1, 0.25, 0, 10, 10), GridSizes{32, 32, 16});
  EXPECT_FALSE(o.feasible);
  EXPECT_DOUBLE_EQ(o.leakage_bps_hz, 0.0);
}

TEST(GridCsv, HeaderAndRowCount) {
  std::ostringstream os;
  write_oracle_grid_csv(powers_scenario(1, 0.5, 1, 10, 10), GridSizes{3, 4, 5}, os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "rho,v_re,v_im,gamma_d,gamma_e,feasible");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 3 * 4 * 5);
}

TEST(EnvelopeSamples, FirstSampleIsSilentRelay) {
  const Scenario s = powers_scenario(1, 4, 1, 10, 10);
  const auto v = envelope_samples(s, 0.3, 100, 1);
  ASSERT_EQ(v.size(), 100u);
  EXPECT_DOUBLE_EQ(v.front(), 10.0);
  EXPECT_TRUE(envelope_samples(s, 0.3, 0, 1).empty());
}

TEST(EnvelopeSamples, ConstructiveScenarioStaysInside) {
  const Scenario s = powers_scenario(1, 4, 1, 10, 10);
  for (double rho : {0.0, 0.1, 0.5, 1.0}) {
    const double hi = snr_d_max(s, rho).gamma;
    const double lo = snr_d_min(s, rho).gamma;
    for (double g : envelope_samples(s, rho, 10'000, 2)) {
      ASSERT_LE(g, hi + 1e-9 * (1 + hi));
      ASSERT_GE(g, lo - 1e-9 * (1 + hi));
    }
  }
}

TEST(MonteCarlo, SilentRelay) {
  const Scenario s = powers_scenario(1, 1, 1, 10, 10);
  const double sim = monte_carlo_snr_d(s, RelayControl{0.4, 0.0}, 200'000, 1);
  EXPECT_NEAR(sim / 10.0, 1.0, monte_carlo_tolerance(200'000));
}

TEST(MonteCarlo, WorkedExample) {
  const Scenario s = powers_scenario(1, 1, 1, 10, 100);
  const std::size_t n = 200'000;
  const double sim = monte_carlo_snr_d(s, RelayControl{0.25, 1.0}, n, 2);
  EXPECT_NEAR(sim / 11.25, 1.0, monte_carlo_tolerance(n));
}

TEST(MonteCarlo, BitIdenticalForSameSeed) {
  const Scenario s = random_scenario(5, 5).scenario;
  const RelayControl c{0.3, 0.5 * max_amplification(s, 0.3)};
  EXPECT_EQ(monte_carlo_snr_d(s, c, 20'000, 9), monte_carlo_snr_d(s, c, 20'000, 9));
  EXPECT_NE(monte_carlo_snr_d(s, c, 20'000, 9), monte_carlo_snr_d(s, c, 20'000, 10));
}

TEST(MonteCarlo, MoreSymbolsShrinkDeviation) {
  const Scenario s = powers_scenario(1, 2, 0.5, 10, 10);
  const RelayControl c{0.5, std::polar(0.8 * max_amplification(s, 0.5), 1.0)};
  const double exact = effective_snr_d(s, c);
  double dev_small = 0.0, dev_large = 0.0;
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    dev_small += std::abs(monte_carlo_snr_d(s, c, 10'000, seed) / exact - 1.0);
    dev_large += std::abs(monte_carlo_snr_d(s, c, 40'000, seed + 100) / exact - 1.0);
  }
  EXPECT_LT(dev_large, dev_small);
}

TEST(MonteCarlo, Preconditions) {
  const Scenario s = powers_scenario(1, 1, 1, 10, 10);
  EXPECT_THROW(monte_carlo_snr_d(s, RelayControl{}, 9'999, 1), DomainError);
  EXPECT_THROW(monte_carlo_snr_d(s, RelayControl{1.2, 0.0}, 10'000, 1), DomainError);
  EXPECT_THROW(monte_carlo_snr_d(s, RelayControl{0.5, 100.0}, 10'000, 1), ConstraintError);
}

TEST(RandomScenario, DeterministicAndLabeled) {
  const LabeledScenario a = random_scenario(42, 7);
  const LabeledScenario b = random_scenario(42, 7);
  EXPECT_EQ(a.scenario.h_sd, b.scenario.h_sd);
  EXPECT_EQ(a.scenario.p_e, b.scenario.p_e);
  EXPECT_NE(a.label.find("seed=42 index=7"), std::string::npos);
  EXPECT_NE(random_scenario(42, 8).scenario.h_sd, a.scenario.h_sd);
}

TEST(RandomScenario, WithinBoundsAndHitsTarget) {
  for (int i = 0; i < 300; ++i) {
    const StrategyClass target = static_cast<StrategyClass>(i % 3);
    const LabeledScenario ls = random_scenario(43, i, target);
    const Scenario& s = ls.scenario;
    EXPECT_EQ(classify_case(s), target);
    for (ComplexGain h : {s.h_sd, s.h_se, s.h_ed}) {
      EXPECT_GE(std::abs(h), 1e-3 * (1 - 1e-12));
      EXPECT_LE(std::abs(h), 10.0 * (1 + 1e-12));
    }
    EXPECT_GE(s.p_s, 0.1 * (1 - 1e-12));
    EXPECT_LE(s.p_e, 1e3 * (1 + 1e-12));
    EXPECT_DOUBLE_EQ(s.sigma2, 1.0);
    EXPECT_NE(ls.label.find(std::string(to_string(target))), std::string::npos);
  }
}

TEST(RandomScenario, UnreachableTargetThrows) {
  RandomScenarioBounds b;
  // Near-equal gains and unit powers: |h_se|^2 never drops to half of |h_sd|^2.
  b.gain_min = 1.0;
  b.gain_max = 1.001;
  b.power_min = b.power_max = 1.0;
  EXPECT_THROW(
      random_scenario(1, 0, StrategyClass::DestructiveForwardingPlusJamming, b),
      DomainError);
}

}  // namespace
}  // namespace spoofrelay
