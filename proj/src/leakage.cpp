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

#include "spoofrelay/leakage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "spoofrelay/error.hpp"

namespace spoofrelay {
namespace {

constexpr double kPowerSlack = 1e-9;

void check_rho(double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw DomainError("power-splitting ratio must lie in [0, 1]");
  }
}

double safe_arg(ComplexGain h) { return std::abs(h) == 0.0 ? 0.0 : std::arg(h); }

// Shared numerator/denominator structure of both envelope branches that use
// the full power budget:
//   (sqrt(sd (1 + rho se ps)) +/- sqrt(pe rho se ed))^2 ps
//   -------------------------------------------------------
//                1 + rho se ps + ed pe
// Written without dividing by |h_sd| so that h_sd = 0 stays well defined.
double full_power_snr(const ChannelPowers& p, double rho, double sign) {
  const double k = 1.0 + rho * p.se * p.ps;
  const double amp =
      std::sqrt(p.sd * k) + sign * std::sqrt(p.pe * rho * p.se * p.ed);
  return amp * amp * p.ps / (k + p.ed * p.pe);
}

// C = |h_sd|^2 / (|h_se|^2 (|h_ed|^2 pe - |h_sd|^2 ps)) when it lies in
// [0, 1]; empty otherwise (including a zero or negative denominator).
std::optional<double> nulling_threshold(const ChannelPowers& p) {
  const double den = p.se * (p.ed * p.pe - p.sd * p.ps);
  if (!(den > 0.0)) return std::nullopt;
  const double c = p.sd / den;
  if (c >= 0.0 && c <= 1.0) return c;
  return std::nullopt;
}

}  // namespace

ChannelPowers channel_powers(const Scenario& s) {
  return ChannelPowers{std::norm(s.h_sd), std::norm(s.h_se), std::norm(s.h_ed),
                       s.ps_norm(), s.pe_norm()};
}

double rate_from_snr(double snr) { return std::log2(1.0 + snr); }

double passive_rate_d(const Scenario& s) {
  return rate_from_snr(s.ps_norm() * std::norm(s.h_sd));
}

double passive_rate_e(const Scenario& s) {
  return rate_from_snr(s.ps_norm() * std::norm(s.h_se));
}

double passive_leakage(const Scenario& s) {
  const double r_d = passive_rate_d(s);
  return passive_rate_e(s) >= r_d ? r_d : 0.0;
}

double relay_power_used(const Scenario& s, const RelayControl& c) {
  return std::norm(c.v) * (c.rho * std::norm(s.h_se) * s.p_s + s.sigma2);
}

double max_amplification(const Scenario& s, double rho) {
  check_rho(rho);
  const ChannelPowers p = channel_powers(s);
  return std::sqrt(p.pe / (rho * p.se * p.ps + 1.0));
}

double effective_snr_d(const Scenario& s, const RelayControl& c) {
  check_rho(c.rho);
  const double used = relay_power_used(s, c);
  if (used > s.p_e * (1.0 + kPowerSlack) && used > 0.0) {
    throw ConstraintError("relay control exceeds the eavesdropper power budget");
  }
  const ComplexGain path = s.h_sd + c.v * std::sqrt(c.rho) * s.h_se * s.h_ed;
  return std::norm(path) * s.p_s /
         ((1.0 + std::norm(c.v) * std::norm(s.h_ed)) * s.sigma2);
}

double eavesdropper_snr(const Scenario& s, double rho) {
  check_rho(rho);
  return (1.0 - rho) * std::norm(s.h_se) * s.ps_norm();
}

double constructive_phase(const Scenario& s) {
  return wrap_phase(safe_arg(s.h_sd) - safe_arg(s.h_se) - safe_arg(s.h_ed));
}

double rho1(const Scenario& s) {
  const ChannelPowers p = channel_powers(s);
  if (p.se == 0.0) return 1.0;
  // -1 + sqrt(1 + x) evaluated as x / (1 + sqrt(1 + x)) to avoid
  // cancellation for small x.
  const double x = 4.0 * p.ps * p.pe * p.sd * p.ed;
  const double root = x / (1.0 + std::sqrt(1.0 + x));
  return std::min(1.0, root / (2.0 * p.se * p.ps));
}

double rho2(const Scenario& s) {
  return nulling_threshold(channel_powers(s)).value_or(1.0);
}

Envelope snr_d_max(const Scenario& s, double rho) {
  check_rho(rho);
  const ChannelPowers p = channel_powers(s);
  const double cap = max_amplification(s, rho);

  double magnitude = 0.0;
  double gamma = 0.0;
  if (rho <= rho1(s)) {
    // Interior stationary point of |h_sd + t k|^2 / (1 + t^2 ed).
    if (rho > 0.0 && p.se > 0.0 && p.sd * p.ed > 0.0) {
      magnitude = std::min(std::sqrt(rho * p.se / (p.sd * p.ed)), cap);
    }
    gamma = p.ps * (p.sd + rho * p.se);
  } else {
    magnitude = cap;
    gamma = full_power_snr(p, rho, +1.0);
  }
  return Envelope{gamma, std::polar(magnitude, constructive_phase(s))};
}

Envelope snr_d_min(const Scenario& s, double rho) {
  check_rho(rho);
  const ChannelPowers p = channel_powers(s);
  const double cap = max_amplification(s, rho);
  const std::optional<double> c = nulling_threshold(p);
  const double r2 = c.value_or(1.0);

  const double gamma = rho <= r2 ? full_power_snr(p, rho, -1.0) : 0.0;

  // Below the threshold the SNR decreases in |v| all the way to the cap;
  // from the threshold on, the magnitude that cancels the direct path fits
  // inside the budget.
  double magnitude = cap;
  if (c && rho >= *c) {
    magnitude = p.sd == 0.0 ? 0.0
                            : std::min(std::sqrt(p.sd / (rho * p.se * p.ed)), cap);
  }
  return Envelope{gamma,
                  std::polar(magnitude, wrap_phase(constructive_phase(s) +
                                                   std::numbers::pi))};
}

}  // namespace spoofrelay
