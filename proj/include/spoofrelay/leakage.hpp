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

// Rate and SNR expressions for passive and active (spoofing relay)
// eavesdropping.
//
// The eavesdropper E works as a full-duplex amplify-and-forward relay. It
// splits its received signal: a fraction rho is amplified by the complex
// coefficient v and forwarded to D, the remaining 1 - rho feeds its own
// decoder. Forwarding changes the SNR that D reports back to the source, and
// hence the rate the source picks; E wins whenever it can still decode that
// rate.
//
// For a fixed rho, every SNR between snr_d_min(rho) and snr_d_max(rho) is
// reachable at D with some feasible v. Both envelope functions return the
// extremal SNR together with a coefficient that attains it.

#ifndef SPOOFRELAY_LEAKAGE_HPP
#define SPOOFRELAY_LEAKAGE_HPP

#include "spoofrelay/channel_model.hpp"

namespace spoofrelay {

// Eavesdropper action.
struct RelayControl {
  double rho = 0.0;  // power-splitting ratio in [0, 1]
  ComplexGain v;     // amplification coefficient
};

struct Envelope {
  double gamma = 0.0;
  ComplexGain v_opt;
};

// Squared gain magnitudes and noise-normalized powers. Every closed form
// below is written in terms of these five numbers.
struct ChannelPowers {
  double sd = 0.0;  // |h_sd|^2
  double se = 0.0;  // |h_se|^2
  double ed = 0.0;  // |h_ed|^2
  double ps = 0.0;  // p_s / sigma2
  double pe = 0.0;  // p_e / sigma2
};

ChannelPowers channel_powers(const Scenario& s);

// log2(1 + SNR)
double rate_from_snr(double snr);

double passive_rate_d(const Scenario& s);
double passive_rate_e(const Scenario& s);

// Rate of the legitimate link if E can decode it (R_E >= R_D), else 0.
double passive_leakage(const Scenario& s);

// Transmit power of E: |v|^2 (rho |h_se|^2 p_s + sigma2).
double relay_power_used(const Scenario& s, const RelayControl& c);

// Largest |v| allowed by the power budget at splitting ratio rho.
double max_amplification(const Scenario& s, double rho);

// SNR at D with E forwarding. Throws ConstraintError when the control exceeds
// the power budget (relative slack 1e-9) and DomainError for rho outside
// [0, 1].
double effective_snr_d(const Scenario& s, const RelayControl& c);

// SNR at E's decoder: (1 - rho) |h_se|^2 p_s / sigma2.
double eavesdropper_snr(const Scenario& s, double rho);

// Phase of v that makes the relayed path add in phase with the direct path.
// arg(0) is taken as 0.
double constructive_phase(const Scenario& s);

// Splitting ratio above which the SNR-maximizing |v| sits on the power cap.
// Returns 1 when |h_se| = 0.
double rho1(const Scenario& s);

// Splitting ratio from which destructive forwarding can null the direct
// path completely; 1 when that never happens for rho <= 1.
double rho2(const Scenario& s);

Envelope snr_d_max(const Scenario& s, double rho);
Envelope snr_d_min(const Scenario& s, double rho);

}  // namespace spoofrelay

#endif  // SPOOFRELAY_LEAKAGE_HPP
