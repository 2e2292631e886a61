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

#include "spoofrelay/scenario_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "spoofrelay/error.hpp"

namespace spoofrelay {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Rethrows validation failures with the document name attached.
template <typename F>
auto with_source(const KeyValueDocument& doc, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw ParseError(doc.source() + ": " + e.what());
  }
}

const std::initializer_list<std::string_view> kScenarioKeys = {
    "h_sd_re", "h_sd_im", "h_se_re", "h_se_im", "h_ed_re",
    "h_ed_im", "p_s",     "p_e",     "sigma2"};

const std::initializer_list<std::string_view> kGeometryKeys = {
    "d_sd", "d_se", "carrier_hz", "snr_d_db", "pe_over_ps", "min_distance_m"};

const std::initializer_list<std::string_view> kSweepKeys = {
    "d_sd",       "carrier_hz", "snr_d_db",  "pe_over_ps", "min_distance_m",
    "d_se_start", "d_se_stop",  "d_se_step", "out"};

GeometryConfig geometry_fields(const KeyValueDocument& doc, GeometryConfig g) {
  g.d_sd = doc.number_or("d_sd", g.d_sd);
  g.carrier_hz = doc.number_or("carrier_hz", g.carrier_hz);
  g.snr_d_db = doc.number_or("snr_d_db", g.snr_d_db);
  g.pe_over_ps = doc.number_or("pe_over_ps", g.pe_over_ps);
  g.min_distance_m = doc.number_or("min_distance_m", g.min_distance_m);
  return g;
}

}  // namespace

KeyValueDocument KeyValueDocument::parse(std::string_view text, std::string source) {
  KeyValueDocument doc;
  doc.source_ = std::move(source);

  if (trim(text).starts_with('{')) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(doc.source_ + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(doc.source_ + ": expected a JSON object");
    for (const auto& [key, value] : j.items()) {
      Field f;
      if (value.is_number()) {
        f.value = value.get<double>();
        f.raw = value.dump();
      } else if (value.is_string()) {
        f.raw = value.get<std::string>();
      } else {
        throw ParseError(doc.source_ + ": field '" + key +
                         "': expected a number or a string");
      }
      doc.fields_.emplace(key, std::move(f));
    }
    return doc;
  }

  int line_no = 0;
  std::istringstream lines{std::string(text)};
  for (std::string line; std::getline(lines, line);) {
    ++line_no;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
    }
    body = trim(body);
    if (body.empty()) continue;

    const auto sep = body.find_first_of("=:");
    const std::string loc = doc.source_ + ":" + std::to_string(line_no);
    if (sep == std::string_view::npos) {
      throw ParseError(loc + ": expected 'key = value'");
    }
    const std::string key{trim(body.substr(0, sep))};
    std::string_view value = trim(body.substr(sep + 1));
    if (key.empty()) throw ParseError(loc + ": missing key");
    if (value.empty()) throw ParseError(loc + ": field '" + key + "': missing value");
    if (doc.fields_.contains(key)) {
      throw ParseError(loc + ": field '" + key + "' given twice");
    }

    Field f;
    f.line = line_no;
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      f.raw = std::string(value.substr(1, value.size() - 2));
    } else {
      f.raw = std::string(value);
      f.value = parse_number(value);
    }
    doc.fields_.emplace(key, std::move(f));
  }
  return doc;
}

bool KeyValueDocument::has(std::string_view key) const {
  return fields_.find(key) != fields_.end();
}

const KeyValueDocument::Field& KeyValueDocument::field(std::string_view key) const {
  const auto it = fields_.find(key);
  if (it == fields_.end()) {
    throw ParseError(source_ + ": missing required field '" + std::string(key) + "'");
  }
  return it->second;
}

std::string KeyValueDocument::where(const Field& f) const {
  return f.line > 0 ? source_ + ":" + std::to_string(f.line) : source_;
}

double KeyValueDocument::number(std::string_view key) const {
  const Field& f = field(key);
  if (!f.value || !std::isfinite(*f.value)) {
    throw ParseError(where(f) + ": field '" + std::string(key) +
                     "': expected a finite number, got '" + f.raw + "'");
  }
  return *f.value;
}

double KeyValueDocument::number_or(std::string_view key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

std::optional<std::string> KeyValueDocument::text(std::string_view key) const {
  if (!has(key)) return std::nullopt;
  return field(key).raw;
}

void KeyValueDocument::reject_unknown(
    std::initializer_list<std::string_view> allowed) const {
  for (const auto& [key, f] : fields_) {
    bool known = false;
    for (std::string_view a : allowed) known = known || a == key;
    if (!known) throw ParseError(where(f) + ": unknown field '" + key + "'");
  }
}

Scenario scenario_from_document(const KeyValueDocument& doc) {
  doc.reject_unknown(kScenarioKeys);
  Scenario s;
  s.h_sd = {doc.number("h_sd_re"), doc.number("h_sd_im")};
  s.h_se = {doc.number("h_se_re"), doc.number("h_se_im")};
  s.h_ed = {doc.number("h_ed_re"), doc.number("h_ed_im")};
  s.p_s = doc.number("p_s");
  s.p_e = doc.number("p_e");
  s.sigma2 = doc.number("sigma2");
  with_source(doc, [&] {
    validate(s);
    return 0;
  });
  return s;
}

GeometryConfig geometry_from_document(const KeyValueDocument& doc) {
  doc.reject_unknown(kGeometryKeys);
  GeometryConfig g = geometry_fields(doc, GeometryConfig{});
  g.d_se = doc.number("d_se");
  with_source(doc, [&] {
    validate(g);
    return 0;
  });
  return g;
}

SweepConfig sweep_config_from_document(const KeyValueDocument& doc) {
  doc.reject_unknown(kSweepKeys);
  SweepConfig cfg;
  cfg.geometry = geometry_fields(doc, cfg.geometry);
  cfg.d_se_start = doc.number_or("d_se_start", cfg.d_se_start);
  cfg.d_se_stop = doc.number_or("d_se_stop", cfg.d_se_stop);
  cfg.d_se_step = doc.number_or("d_se_step", cfg.d_se_step);
  cfg.output_path = doc.text("out").value_or("");
  with_source(doc, [&] {
    validate(cfg);
    return 0;
  });
  return cfg;
}

std::string read_text_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  if (file.bad()) throw IoError("failed reading '" + path + "'");
  return buf.str();
}

Scenario load_scenario_input(const std::string& path) {
  const KeyValueDocument doc = KeyValueDocument::parse(read_text_file(path), path);
  for (std::string_view key : kScenarioKeys) {
    if (doc.has(key)) return scenario_from_document(doc);
  }
  if (doc.has("d_se")) {
    return with_source(doc, [&] { return build_collinear_scenario(geometry_from_document(doc)); });
  }
  throw ParseError(path + ": neither scenario fields (h_sd_re, ...) nor a geometry (d_se)");
}

SweepConfig load_sweep_config(const std::string& path) {
  return sweep_config_from_document(KeyValueDocument::parse(read_text_file(path), path));
}

std::string format_scenario(const Scenario& s) {
  char buf[1024];
  std::snprintf(buf, sizeof buf,
                "h_sd_re = %.17g\nh_sd_im = %.17g\nh_se_re = %.17g\nh_se_im = %.17g\n"
                "h_ed_re = %.17g\nh_ed_im = %.17g\np_s = %.17g\np_e = %.17g\n"
                "sigma2 = %.17g\n",
                s.h_sd.real(), s.h_sd.imag(), s.h_se.real(), s.h_se.imag(),
                s.h_ed.real(), s.h_ed.imag(), s.p_s, s.p_e, s.sigma2);
  return buf;
}

std::string solution_csv_row(const AttackSolution& sol) {
  const double magnitude = std::abs(sol.v_star);
  const double phase = magnitude == 0.0 ? 0.0 : wrap_phase(std::arg(sol.v_star));
  char buf[512];
  std::snprintf(buf, sizeof buf, "%s,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g",
                to_string(sol.strategy).data(), sol.rho_star, magnitude, phase,
                sol.gamma_d, sol.gamma_e, sol.leakage_bps_hz, sol.residual,
                sol.jam_power_used);
  return buf;
}

}  // namespace spoofrelay
