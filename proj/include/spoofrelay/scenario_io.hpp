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

// Text formats for scenarios, geometries and sweep configurations.
//
// A document is either a flat JSON object or a list of `key = value` lines
// (':' also separates; '#' starts a comment). Values are numbers, except for
// the sweep output path. One key per line:
//
//   # jamming-only fixture
//   h_sd_re = 1
//   h_sd_im = 0
//   ...
//
// Scenario keys: h_sd_re h_sd_im h_se_re h_se_im h_ed_re
// h_ed_im p_s p_e sigma2 (all required). Geometry keys: d_sd d_se
// carrier_hz snr_d_db pe_over_ps min_distance_m (d_se required, the rest
// default to the 1 km / 1.8 GHz / 10 dB / P_E = P_S setup). Sweep keys: the
// geometry keys without d_se, plus d_se_start d_se_stop d_se_step out.

#ifndef SPOOFRELAY_SCENARIO_IO_HPP
#define SPOOFRELAY_SCENARIO_IO_HPP

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "spoofrelay/channel_model.hpp"
#include "spoofrelay/experiments.hpp"
#include "spoofrelay/optimizer.hpp"

namespace spoofrelay {

class KeyValueDocument {
 public:
  // `source` names the input in diagnostics (usually the file path).
  static KeyValueDocument parse(std::string_view text, std::string source);

  bool has(std::string_view key) const;
  double number(std::string_view key) const;
  double number_or(std::string_view key, double fallback) const;
  std::optional<std::string> text(std::string_view key) const;

  // ParseError naming the first key not in `allowed`.
  void reject_unknown(std::initializer_list<std::string_view> allowed) const;

  const std::string& source() const { return source_; }

 private:
  struct Field {
    std::string raw;
    std::optional<double> value;
    int line = 0;  // 0 for JSON input
  };
  const Field& field(std::string_view key) const;
  std::string where(const Field& f) const;

  std::map<std::string, Field, std::less<>> fields_;
  std::string source_;
};

Scenario scenario_from_document(const KeyValueDocument& doc);
GeometryConfig geometry_from_document(const KeyValueDocument& doc);
SweepConfig sweep_config_from_document(const KeyValueDocument& doc);

std::string read_text_file(const std::string& path);

// A scenario file, or a geometry file turned into a collinear scenario.
Scenario load_scenario_input(const std::string& path);
SweepConfig load_sweep_config(const std::string& path);

// Round-trippable key = value text (17 significant digits).
std::string format_scenario(const Scenario& s);

inline constexpr const char* kSolutionCsvHeader =
    "strategy,rho_star,v_mag,v_phase_rad,gamma_d,gamma_e,leakage_bps_hz,residual,"
    "jam_power";

// One CSV line (no newline) matching kSolutionCsvHeader, 9 significant
// digits, phase in (-pi, pi].
std::string solution_csv_row(const AttackSolution& sol);

}  // namespace spoofrelay

#endif  // SPOOFRELAY_SCENARIO_IO_HPP
