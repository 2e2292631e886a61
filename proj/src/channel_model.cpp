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

#include "spoofrelay/channel_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spoofrelay/error.hpp"

namespace spoofrelay {
namespace {

bool finite(ComplexGain h) {
  return std::isfinite(h.real()) && std::isfinite(h.imag());
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

void validate(const Scenario& s) {
  require(finite(s.h_sd), "scenario: h_sd must be finite");
  require(finite(s.h_se), "scenario: h_se must be finite");
  require(finite(s.h_ed), "scenario: h_ed must be finite");
  require(std::isfinite(s.p_s) && s.p_s > 0.0, "scenario: p_s must be > 0");
  require(std::isfinite(s.p_e) && s.p_e >= 0.0, "scenario: p_e must be >= 0");
  require(std::isfinite(s.sigma2) && s.sigma2 > 0.0,
          "scenario: sigma2 must be > 0");
  require(std::isfinite(s.ps_norm()) && std::isfinite(s.pe_norm()),
          "scenario: normalized powers overflow");
}

void validate(const GeometryConfig& cfg) {
  require(std::isfinite(cfg.d_sd) && cfg.d_sd > 0.0, "geometry: d_sd must be > 0");
  require(std::isfinite(cfg.d_se) && cfg.d_se > 0.0, "geometry: d_se must be > 0");
  require(std::isfinite(cfg.carrier_hz) && cfg.carrier_hz > 0.0,
          "geometry: carrier_hz must be > 0");
  require(std::isfinite(cfg.snr_d_db), "geometry: snr_d_db must be finite");
  require(std::isfinite(cfg.pe_over_ps) && cfg.pe_over_ps >= 0.0,
          "geometry: pe_over_ps must be >= 0");
  require(std::isfinite(cfg.min_distance_m) && cfg.min_distance_m > 0.0,
          "geometry: min_distance_m must be > 0");
}

double wavelength(double carrier_hz) {
  require(std::isfinite(carrier_hz) && carrier_hz > 0.0,
          "carrier frequency must be > 0");
  return kSpeedOfLight / carrier_hz;
}

double friis_power_gain(double distance_m, double carrier_hz) {
  require(std::isfinite(distance_m) && distance_m > 0.0, "distance must be > 0");
  const double amplitude =
      wavelength(carrier_hz) / (4.0 * std::numbers::pi * distance_m);
  return amplitude * amplitude;
}

double wrap_phase(double radians) {
  double r = std::remainder(radians, 2.0 * std::numbers::pi);  // [-pi, pi]
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

ComplexGain gain_from_distance(double distance_m, double carrier_hz) {
  const double magnitude = std::sqrt(friis_power_gain(distance_m, carrier_hz));
  // Work in cycles first: d / lambda is large (~6000 at 1 km, 1.8 GHz) and
  // reducing it before scaling by 2 pi keeps the phase accurate.
  const double cycles = std::remainder(distance_m / wavelength(carrier_hz), 1.0);
  const double phase = wrap_phase(-2.0 * std::numbers::pi * cycles);
  return std::polar(magnitude, phase);
}

Scenario build_collinear_scenario(const GeometryConfig& cfg) {
  validate(cfg);
  const double d_ed = std::max(std::abs(cfg.d_se - cfg.d_sd), cfg.min_distance_m);

  Scenario s;
  s.h_sd = gain_from_distance(cfg.d_sd, cfg.carrier_hz);
  s.h_se = gain_from_distance(cfg.d_se, cfg.carrier_hz);
  s.h_ed = gain_from_distance(d_ed, cfg.carrier_hz);
  s.sigma2 = 1.0;
  s.p_s = db_to_linear(cfg.snr_d_db) / std::norm(s.h_sd);
  s.p_e = cfg.pe_over_ps * s.p_s;
  validate(s);
  return s;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace spoofrelay
