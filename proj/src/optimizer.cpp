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

#include "spoofrelay/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "spoofrelay/error.hpp"
#include "spoofrelay/root_finding.hpp"

namespace spoofrelay {
namespace {

constexpr double kResidualTolerance = 1e-9;
constexpr double kQuarticAgreement = 1e-6;
constexpr int kPrescanOctaves = 40;
constexpr int kPrescanPerOctave = 8;

bool residual_ok(double g, double gamma_e) {
  return std::abs(g) <= kResidualTolerance * (1.0 + gamma_e);
}

AttackSolution make_solution(const Scenario& s, StrategyClass strategy, double rho,
                             ComplexGain v, double gamma_d) {
  AttackSolution sol;
  sol.strategy = strategy;
  sol.rho_star = rho;
  sol.v_star = v;
  sol.gamma_d = gamma_d;
  sol.gamma_e = eavesdropper_snr(s, rho);
  sol.leakage_bps_hz = rate_from_snr(gamma_d);
  sol.residual = gamma_d - sol.gamma_e;
  sol.jam_power_used = relay_power_used(s, RelayControl{rho, v});
  return sol;
}

AttackSolution infeasible_solution(const Scenario& s) {
  // E stays silent: no forwarding, no jamming, nothing decodable.
  AttackSolution sol;
  sol.strategy = StrategyClass::Infeasible;
  sol.gamma_d = effective_snr_d(s, RelayControl{});
  sol.gamma_e = eavesdropper_snr(s, 0.0);
  sol.residual = sol.gamma_d - sol.gamma_e;
  return sol;
}

}  // namespace

std::string_view to_string(StrategyClass strategy) {
  switch (strategy) {
    case StrategyClass::ConstructiveForwarding:
      return "constructive";
    case StrategyClass::JammingOnly:
      return "jamming";
    case StrategyClass::DestructiveForwardingPlusJamming:
      return "destructive_jamming";
    case StrategyClass::Infeasible:
      return "infeasible";
  }
  return "infeasible";
}

std::optional<StrategyClass> strategy_from_string(std::string_view name) {
  for (StrategyClass c :
       {StrategyClass::ConstructiveForwarding, StrategyClass::JammingOnly,
        StrategyClass::DestructiveForwardingPlusJamming, StrategyClass::Infeasible}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

StrategyClass classify_case(const Scenario& s) {
  const ChannelPowers p = channel_powers(s);
  if (p.sd < p.se) return StrategyClass::ConstructiveForwarding;
  if (p.se >= p.sd / (1.0 + p.ed * p.pe)) return StrategyClass::JammingOnly;
  return StrategyClass::DestructiveForwardingPlusJamming;
}

AttackSolution solve_case1(const Scenario& s) {
  // g increases from g(0) = ps (sd - se) < 0 to g(1) = snr_d_max(1) >= 0.
  auto g = [&](double rho) {
    return snr_d_max(s, rho).gamma - eavesdropper_snr(s, rho);
  };
  const double g0 = g(0.0);
  const double g1 = g(1.0);
  if (!(g0 < 0.0) || g1 < 0.0) {
    std::ostringstream msg;
    msg << "constructive case: root not bracketed (g(0)=" << g0 << ", g(1)=" << g1
        << ")";
    throw InternalError(msg.str());
  }

  double rho = 1.0;
  if (g1 > 0.0) {
    rho = bisect_boundary(g, 0.0, 1.0, [&](double x, double gx) {
      return residual_ok(gx, eavesdropper_snr(s, x));
    });
  }
  const Envelope env = snr_d_max(s, rho);
  return make_solution(s, StrategyClass::ConstructiveForwarding, rho, env.v_opt,
                       env.gamma);
}

AttackSolution solve_case2(const Scenario& s) {
  const ChannelPowers p = channel_powers(s);
  // Jam just hard enough to pull D's SNR down to ps |h_se|^2.
  double jam = 0.0;
  if (p.se > 0.0 && p.se < p.sd && p.ed > 0.0) {
    jam = std::min((p.sd / p.se - 1.0) / p.ed, p.pe);
  }
  const ComplexGain v =
      std::polar(std::sqrt(jam), wrap_phase(constructive_phase(s) + std::numbers::pi));
  const double gamma_d = effective_snr_d(s, RelayControl{0.0, v});
  return make_solution(s, StrategyClass::JammingOnly, 0.0, v, gamma_d);
}

AttackSolution solve_case3(const Scenario& s, const SolverOptions& opts) {
  if (opts.n_scan < 2) throw DomainError("n_scan must be at least 2");
  auto g = [&](double rho) {
    return snr_d_min(s, rho).gamma - eavesdropper_snr(s, rho);
  };

  const double step = 1.0 / static_cast<double>(opts.n_scan - 1);
  // Near the jamming threshold the feasible window hugs rho = 0 and can end
  // before the first uniform point, so (0, step) is scanned geometrically.
  std::vector<double> points;
  for (int e = -kPrescanOctaves * kPrescanPerOctave; e < 0; ++e) {
    points.push_back(step * std::exp2(static_cast<double>(e) / kPrescanPerOctave));
  }
  for (std::size_t i = 1; i < opts.n_scan; ++i) {
    points.push_back(i + 1 == opts.n_scan ? 1.0 : static_cast<double>(i) * step);
  }

  std::optional<double> root;
  double prev = 0.0;
  for (double rho : points) {
    if (g(rho) <= 0.0) {
      root = bisect_boundary(g, rho, prev, [&](double x, double gx) {
        return residual_ok(gx, eavesdropper_snr(s, x));
      });
      break;
    }
    prev = rho;
  }

  if (opts.quartic_cross_check) {
    const std::vector<double> quartic = destructive_crossings_quartic(s);
    if (root) {
      if (quartic.empty() || std::abs(quartic.front() - *root) > kQuarticAgreement) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "destructive case: scan root " << *root << " disagrees with quartic root "
            << (quartic.empty() ? std::nan("") : quartic.front());
        throw InternalError(msg.str());
      }
    } else {
      // A genuine crossing pair that slipped between two scan points.
      for (std::size_t i = 0; i + 1 < quartic.size(); ++i) {
        if (g(0.5 * (quartic[i] + quartic[i + 1])) < 0.0) {
          throw InternalError("destructive case: scan missed a feasible interval");
        }
      }
    }
  }

  if (!root) return infeasible_solution(s);
  const Envelope env = snr_d_min(s, *root);
  return make_solution(s, StrategyClass::DestructiveForwardingPlusJamming, *root,
                       env.v_opt, env.gamma);
}

AttackSolution solve_attack(const Scenario& s, const SolverOptions& opts) {
  validate(s);
  switch (classify_case(s)) {
    case StrategyClass::ConstructiveForwarding:
      return solve_case1(s);
    case StrategyClass::JammingOnly:
      return solve_case2(s);
    default:
      return solve_case3(s, opts);
  }
}

std::vector<double> destructive_crossings_quartic(const Scenario& s) {
  const ChannelPowers p = channel_powers(s);
  // snr_d_min(rho) = eavesdropper_snr(rho) on the full-power branch becomes
  //   L(rho) = 2 sqrt(sd se ed pe) sqrt(rho (1 + rho se ps))
  // with L quadratic; squaring gives the quartic L^2 - 4 K rho (1 + rho se ps).
  const double l0 = p.sd - p.se * (1.0 + p.ed * p.pe);
  const double l1 = p.sd * p.se * p.ps + 2.0 * p.se * p.ed * p.pe -
                    p.se * p.se * p.ps + p.se;
  const double l2 = p.se * p.se * p.ps;
  const double k = p.sd * p.se * p.ed * p.pe;

  const std::array<double, 5> quartic{
      l0 * l0,
      2.0 * l0 * l1 - 4.0 * k,
      l1 * l1 + 2.0 * l0 * l2 - 4.0 * k * p.se * p.ps,
      2.0 * l1 * l2,
      l2 * l2,
  };

  const double l_scale = std::abs(l0) + std::abs(l1) + std::abs(l2);
  constexpr double kEdge = 1e-9;
  std::vector<double> roots;
  for (double r : real_polynomial_roots(quartic)) {
    if (r < -kEdge || r > 1.0 + kEdge) continue;
    r = std::clamp(r, 0.0, 1.0);
    const double l = l0 + r * (l1 + r * l2);
    if (l < -kEdge * l_scale) continue;  // root of the squared copy only
    roots.push_back(r);
  }
  return roots;
}

}  // namespace spoofrelay
