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


#include "spoofrelay/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "spoofrelay/error.hpp"
#include "spoofrelay/random.hpp"
#include "spoofrelay/scenario_io.hpp"

namespace spoofrelay {
namespace {

constexpr StrategyClass kStrata[] = {StrategyClass::ConstructiveForwarding,
                                     StrategyClass::JammingOnly,
                                     StrategyClass::DestructiveForwardingPlusJamming};

double rel_tol(double x) { return 1e-9 * (1.0 + std::abs(x)); }

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }

  void count() { ++r_.cases; }
  void fail(const LabeledScenario& ls, const std::string& reason) {
    if (r_.failures++ > 0) return;
    std::ostringstream os;
    os << "# counterexample: " << r_.name << "\n# " << ls.label << "\n# " << reason
       << "\n"
       << format_scenario(ls.scenario);
    r_.counterexample = os.str();
  }
  CheckResult finish(std::string summary) {
    r_.summary = std::move(summary);
    return std::move(r_);
  }

 private:
  CheckResult r_;
};

}  // namespace

ClosedForms ClosedForms::library() {
  return ClosedForms{
      [](const Scenario& s) { return solve_attack(s); },
      [](const Scenario& s, double rho) { return spoofrelay::snr_d_max(s, rho); },
      [](const Scenario& s, double rho) { return spoofrelay::snr_d_min(s, rho); },
      [](const Scenario& s, const RelayControl& c) {
        return spoofrelay::effective_snr_d(s, c);
      },
  };
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  os << "verify seed=" << options.seed << " scenarios=" << options.n_scenarios
     << " grid=" << options.grid.n_rho << ',' << options.grid.n_mag << ','
     << options.grid.n_phase << '\n';
  for (const CheckResult& c : checks) {
    os << (c.passed() ? "PASS " : "FAIL ") << c.name << ": " << c.cases << " cases, "
       << c.failures << " failures; " << c.summary << '\n';
  }
  os << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
  for (const CheckResult& c : checks) {
    if (!c.passed()) os << '\n' << c.counterexample;
  }
  return os.str();
}

VerifyReport run_verification(const VerifyOptions& opts, const ClosedForms& forms) {
  if (opts.n_scenarios == 0) throw DomainError("verify: need at least one scenario");
  if (opts.grid.n_rho < 2 || opts.grid.n_mag < 2 || opts.grid.n_phase < 2) {
    throw DomainError("verify: grid sizes must all be at least 2");
  }
  if (opts.mc_pairs > 0 && opts.mc_symbols < 10'000) {
    throw DomainError("verify: Monte-Carlo needs >= 1e4 symbols");
  }

  std::vector<LabeledScenario> scenarios;
  scenarios.reserve(opts.n_scenarios);
  for (std::size_t i = 0; i < opts.n_scenarios; ++i) {
    scenarios.push_back(random_scenario(opts.seed, i, kStrata[i % 3]));
  }

  VerifyReport report;
  report.options = opts;

  // Closed form against exhaustive search, plus the solution's own claims.
  Tally oracle("oracle_agreement");
  Tally decodable("decodability");
  Tally dominance("dominance");
  double worst_diff = 0.0;
  double worst_bound = 0.0;
  for (const LabeledScenario& ls : scenarios) {
    const Scenario& s = ls.scenario;
    const AttackSolution sol = forms.solve(s);
    const OracleResult o = grid_oracle(s, opts.grid, opts.threads);

    oracle.count();
    const double diff = std::abs(sol.leakage_bps_hz - o.leakage_bps_hz);
    worst_diff = std::max(worst_diff, diff);
    worst_bound = std::max(worst_bound, o.resolution_bound);
    if (diff > opts.oracle_tolerance || diff > o.resolution_bound + 1e-9 ||
        o.resolution_bound > opts.oracle_tolerance) {
      oracle.fail(ls, fmt("closed form %.9g bps/Hz, oracle %.9g bps/Hz "
                          "(rho %.9g), resolution bound %.3g",
                          sol.leakage_bps_hz, o.leakage_bps_hz, o.rho_hat,
                          o.resolution_bound));
    }

    decodable.count();
    if (sol.strategy != StrategyClass::Infeasible) {
      const RelayControl c{sol.rho_star, sol.v_star};
      const double gd = effective_snr_d(s, c);
      const double ge = eavesdropper_snr(s, sol.rho_star);
      if (relay_power_used(s, c) > s.p_e * (1.0 + 1e-9) + 1e-300 ||
          gd > ge + rel_tol(ge) || std::abs(gd - sol.gamma_d) > rel_tol(gd) ||
          std::abs(sol.leakage_bps_hz - rate_from_snr(gd)) > 1e-9) {
        decodable.fail(ls, fmt("control rho %.17g |v| %.17g gives gamma_d %.17g, "
                               "gamma_e %.17g, reported gamma_d %.17g",
                               sol.rho_star, std::abs(sol.v_star), gd, ge,
                               sol.gamma_d));
      }
    } else if (sol.leakage_bps_hz != 0.0) {
      decodable.fail(ls, fmt("infeasible attack reports leakage %.9g",
                             sol.leakage_bps_hz));
    }

    dominance.count();
    const double passive = passive_leakage(s);
    if (sol.leakage_bps_hz < passive - 1e-12) {
      dominance.fail(ls, fmt("active %.17g < passive %.17g", sol.leakage_bps_hz, passive));
    }
  }
  report.checks.push_back(oracle.finish(
      fmt("max |closed form - oracle| %.3g bps/Hz, max resolution bound %.3g", worst_diff,
          worst_bound)));

  // Random controls stay inside the envelope; envelope endpoints are attained
  // and agree with a grid search.
  Tally envelope("envelope_containment");
  std::size_t violations = 0;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    const LabeledScenario& ls = scenarios[i];
    const Scenario& s = ls.scenario;
    CounterRng rho_rng(opts.seed, 0x656e7600ULL + i);
    for (std::size_t k = 0; k < opts.envelope_rhos; ++k) {
      const double rho = rho_rng.uniform();
      envelope.count();
      const Envelope hi = forms.snr_d_max(s, rho);
      const Envelope lo = forms.snr_d_min(s, rho);
      const double tol = rel_tol(hi.gamma);

      const std::vector<double> samples =
          envelope_samples(s, rho, opts.envelope_controls, opts.seed ^ (i << 16) ^ k);
      std::size_t outside = 0;
      for (double g : samples) outside += (g < lo.gamma - tol || g > hi.gamma + tol);
      violations += outside;

      const double hi_at = effective_snr_d(s, RelayControl{rho, hi.v_opt});
      const double lo_at = effective_snr_d(s, RelayControl{rho, lo.v_opt});
      const EnvelopeEstimate grid =
          grid_envelope(s, rho, opts.grid.n_mag, opts.grid.n_phase);

      std::string reason;
      if (outside > 0) {
        reason = fmt("rho %.17g: %zu of %zu controls outside [%.9g, %.9g]", rho, outside,
                     samples.size(), lo.gamma, hi.gamma);
      } else if (std::abs(hi_at - hi.gamma) > tol || std::abs(lo_at - lo.gamma) > tol) {
        reason = fmt("rho %.17g: envelope controls give %.9g / %.9g, claimed %.9g / %.9g",
                     rho, lo_at, hi_at, lo.gamma, hi.gamma);
      } else if (grid.max > hi.gamma + tol || grid.min < lo.gamma - tol ||
                 hi.gamma - grid.max > grid.max_error + tol ||
                 grid.min - lo.gamma > grid.min_error + tol) {
        reason = fmt("rho %.17g: grid envelope [%.9g, %.9g] vs closed form [%.9g, %.9g]",
                     rho, grid.min, grid.max, lo.gamma, hi.gamma);
      }
      if (!reason.empty()) envelope.fail(ls, reason);
    }
  }
  report.checks.push_back(envelope.finish(
      fmt("%zu random controls per rho, %zu outside the envelope",
          opts.envelope_controls, violations)));

  // Symbol-level simulation of the relay link.
  Tally mc("monte_carlo_snr");
  double worst_rel = 0.0;
  for (std::size_t i = 0; i < opts.mc_pairs; ++i) {
    const LabeledScenario ls = random_scenario(opts.seed, 1'000'000 + i);
    CounterRng rng(opts.seed, 0x6d6300ULL + i);
    const double rho = rng.uniform();
    const RelayControl c{rho, random_feasible_v(ls.scenario, rho, rng)};
    const double closed = forms.effective_snr_d(ls.scenario, c);
    const double sim = monte_carlo_snr_d(ls.scenario, c, opts.mc_symbols, opts.seed + i);
    const double rel = closed == 0.0 ? std::abs(sim) : std::abs(sim - closed) / closed;
    worst_rel = std::max(worst_rel, rel);
    mc.count();
    if (!(rel <= monte_carlo_tolerance(opts.mc_symbols))) {
      mc.fail(ls, fmt("rho %.17g v %.17g%+.17gi: simulated %.9g, closed form %.9g", rho,
                      c.v.real(), c.v.imag(), sim, closed));
    }
  }
  report.checks.push_back(mc.finish(fmt("%zu symbols, max relative error %.3g (tol %.3g)",
                                        opts.mc_symbols, worst_rel,
                                        monte_carlo_tolerance(opts.mc_symbols))));

  report.checks.push_back(decodable.finish("solution controls feasible and decodable"));
  report.checks.push_back(dominance.finish("active leakage >= passive leakage"));
  return report;
}

}  // namespace spoofrelay
