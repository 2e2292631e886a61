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

#ifndef SPOOFRELAY_CHANNEL_MODEL_HPP
#define SPOOFRELAY_CHANNEL_MODEL_HPP

#include <complex>

namespace spoofrelay {

using ComplexGain = std::complex<double>;

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

// Source S, legitimate receiver D and eavesdropper/relay E.
//
// Channel gains are complex baseband coefficients; powers share one unit
// (watts or any normalized unit). Symbols are unit-variance CSCG, noise at
// every receiver is CSCG with variance sigma2.
struct Scenario {
  ComplexGain h_sd;
  ComplexGain h_se;
  ComplexGain h_ed;
  double p_s = 1.0;
  double p_e = 0.0;
  double sigma2 = 1.0;

  // Transmit powers normalized by the noise power.
  double ps_norm() const { return p_s / sigma2; }
  double pe_norm() const { return p_e / sigma2; }
};

// Throws DomainError unless all gains are finite, p_s > 0, p_e >= 0 and
// sigma2 > 0 (and the normalized powers are finite).
void validate(const Scenario& s);

// Collinear placement: E sits on the S-D line at distance d_se from S.
struct GeometryConfig {
  double d_sd = 1000.0;
  double d_se = 500.0;
  double carrier_hz = 1.8e9;
  double snr_d_db = 10.0;  // received SNR at D without attack
  double pe_over_ps = 1.0;
  double min_distance_m = 1.0;  // clamp for the E-D distance
};

void validate(const GeometryConfig& cfg);

double wavelength(double carrier_hz);

// Free-space power gain (lambda / (4 pi d))^2.
double friis_power_gain(double distance_m, double carrier_hz);

// Wraps an angle into (-pi, pi].
double wrap_phase(double radians);

// LoS gain: magnitude sqrt(friis_power_gain), phase -2 pi d / lambda.
ComplexGain gain_from_distance(double distance_m, double carrier_hz);

// Scenario with sigma2 = 1 and p_s chosen so that the passive SNR at D equals
// snr_d_db; p_e = pe_over_ps * p_s.
Scenario build_collinear_scenario(const GeometryConfig& cfg);

double db_to_linear(double db);

}  // namespace spoofrelay

#endif  // SPOOFRELAY_CHANNEL_MODEL_HPP
