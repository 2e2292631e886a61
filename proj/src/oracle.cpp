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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "spoofrelay/error.hpp"
#include "spoofrelay/root_finding.hpp"

namespace spoofrelay {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Grid {
  const Scenario& s;
  GridSizes sizes;

  double rho(std::size_t i) const {
    return i + 1 == sizes.n_rho
               ? 1.0
               : static_cast<double>(i) / static_cast<double>(sizes.n_rho - 1);
  }
  double magnitude(double cap, std::size_t j) const {
    return j + 1 == sizes.n_mag
               ? cap
               : cap * static_cast<double>(j) / static_cast<double>(sizes.n_mag - 1);
  }
  double phase(std::size_t k) const {
    return 2.0 * std::numbers::pi * static_cast<double>(k) /
           static_cast<double>(sizes.n_phase);
  }
  ComplexGain v(double cap, std::size_t j, std::size_t k) const {
    return std::polar(magnitude(cap, j), phase(k));
  }
};

void check_sizes(const GridSizes& g) {
  if (g.n_rho < 2 || g.n_mag < 2 || g.n_phase < 2) {
    throw DomainError("oracle grid sizes must all be at least 2");
  }
}

struct GridPoint {
  std::size_t j = 0;
  std::size_t k = 0;
  double gamma = 0.0;
};

// Every point of the power disk lies within R = dr/2 + (r + dr/2) dphi/2 of
// the grid point on its ring and spoke, and over that ball the gradient of
//   f(v) = ps |h_sd + v k|^2 / (1 + c |v|^2),   k = sqrt(rho) h_se h_ed
// is at most 2 ps M |k| / D + 2 ps M^2 c m / D^2 with M, m and D the largest
// |h_sd + v k|, largest |v| and smallest denominator in the ball. So f stays
// within R times that of its grid value over the whole cell.
class CellBounds {
 public:
  CellBounds(const Grid& grid, double rho, double cap)
      : s_(grid.s),
        ps_(grid.s.ps_norm()),
        c_(std::norm(grid.s.h_ed)),
        k_(std::sqrt(rho) * grid.s.h_se * grid.s.h_ed),
        dr_(cap / static_cast<double>(grid.sizes.n_mag - 1)),
        dphi_(2.0 * std::numbers::pi / static_cast<double>(grid.sizes.n_phase)) {}

  // Largest deviation of f from f(v) within the cell of v (on ring radius r).
  double slack(double r, ComplexGain v) const {
    const double radius = 0.5 * dr_ + (r + 0.5 * dr_) * 0.5 * dphi_;
    const double m = r + radius;
    const double d_min = 1.0 + c_ * std::pow(std::max(0.0, r - radius), 2);
    const double k = std::abs(k_);
    const double big_m = std::abs(s_.h_sd + v * k_) + radius * k;
    return radius * (2.0 * ps_ * big_m * k / d_min +
                     2.0 * ps_ * big_m * big_m * c_ * m / (d_min * d_min));
  }

 private:
  const Scenario& s_;
  double ps_, c_;
  ComplexGain k_;
  double dr_, dphi_;
};

// Quadratic-peak model: with the sampled extremum f0 and a neighbor f1 one
// grid step away, the continuous extremum within half a step of the sample
// differs from f0 by at most |f0 - f1| / 4.
double peak_error(const Grid& grid, double rho, double cap, const GridPoint& p) {
  auto eval = [&](std::size_t j, std::size_t k) {
    return effective_snr_d(grid.s, RelayControl{rho, grid.v(cap, j, k)});
  };
  const std::size_t np = grid.sizes.n_phase;
  double err = 0.0;
  for (std::size_t k : {(p.k + np - 1) % np, (p.k + 1) % np}) {
    err = std::max(err, std::abs(p.gamma - eval(p.j, k)) / 4.0);
  }
  double mag_err = 0.0;
  if (p.j > 0) mag_err = std::max(mag_err, std::abs(p.gamma - eval(p.j - 1, p.k)) / 4.0);
  if (p.j + 1 < grid.sizes.n_mag) {
    mag_err = std::max(mag_err, std::abs(p.gamma - eval(p.j + 1, p.k)) / 4.0);
  }
  return err + mag_err;
}

struct SliceSummary {
  double gamma_e = 0.0;
  bool any_feasible = false;
  // Some point of the continuous slice may be decodable.
  bool maybe_feasible = false;
  bool any_infeasible = false;
  GridPoint best_feasible{0, 0, -kInf};
  GridPoint lowest_infeasible{0, 0, kInf};
  GridPoint grid_max{0, 0, -kInf};
  double max_error = 0.0;
  // Best feasible value of the slice after refinement.
  double value = -kInf;
  ComplexGain v_value;
};

SliceSummary summarize_slice(const Grid& grid, std::size_t i) {
  const double rho = grid.rho(i);
  const double cap = max_amplification(grid.s, rho);
  SliceSummary out;
  out.gamma_e = eavesdropper_snr(grid.s, rho);
  const CellBounds cells(grid, rho, cap);
  double lower = kInf;

  for (std::size_t j = 0; j < grid.sizes.n_mag; ++j) {
    const double r = grid.magnitude(cap, j);
    for (std::size_t k = 0; k < grid.sizes.n_phase; ++k) {
      const ComplexGain v = grid.v(cap, j, k);
      const double g = effective_snr_d(grid.s, RelayControl{rho, v});
      lower = std::min(lower, g - cells.slack(r, v));
      if (g > out.grid_max.gamma) out.grid_max = {j, k, g};
      if (g <= out.gamma_e) {
        out.any_feasible = true;
        if (g > out.best_feasible.gamma) out.best_feasible = {j, k, g};
      } else {
        out.any_infeasible = true;
        if (g < out.lowest_infeasible.gamma) out.lowest_infeasible = {j, k, g};
      }
    }
  }
  // The rigorous cell bound is loose near the maximum; the peak model is not.
  out.max_error = peak_error(grid, rho, cap, out.grid_max);
  out.maybe_feasible = lower <= out.gamma_e;

  if (!out.any_feasible) return out;
  const ComplexGain v_in = grid.v(cap, out.best_feasible.j, out.best_feasible.k);
  out.value = out.best_feasible.gamma;
  out.v_value = v_in;
  if (out.any_infeasible) {
    const ComplexGain v_out =
        grid.v(cap, out.lowest_infeasible.j, out.lowest_infeasible.k);
    auto along = [&](double t) { return v_in + t * (v_out - v_in); };
    auto f = [&](double t) {
      return effective_snr_d(grid.s, RelayControl{rho, along(t)}) - out.gamma_e;
    };
    const double t = bisect_boundary(
        f, 0.0, 1.0,
        [&](double, double ft) { return std::abs(ft) <= 1e-13 * (1.0 + out.gamma_e); },
        BisectionOptions{0.0, 200});
    const double g = effective_snr_d(grid.s, RelayControl{rho, along(t)});
    if (g > out.value) {
      out.value = g;
      out.v_value = along(t);
    }
  }
  return out;
}

std::vector<SliceSummary> summarize_all(const Grid& grid, unsigned threads) {
  const std::size_t n = grid.sizes.n_rho;
  std::vector<SliceSummary> slices(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += threads) slices[i] = summarize_slice(grid, i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return slices;
}

// Upper estimate of the continuous optimum. Per slice the optimum is at most
// min(envelope max, gamma_e); between two adjacent slices gamma_e is linear
// and the upper envelope is monotone, so the endpoint maxima bound both.
double optimum_upper_estimate(const std::vector<SliceSummary>& slices) {
  double est = -kInf;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const SliceSummary& a = slices[i];
    if (a.maybe_feasible) {
      est = std::max(est, std::min(a.grid_max.gamma + a.max_error, a.gamma_e));
    }
    if (i + 1 == slices.size()) continue;
    const SliceSummary& b = slices[i + 1];
    if (!a.maybe_feasible && !b.maybe_feasible) continue;
    const double upper = std::max(a.grid_max.gamma + a.max_error,
                                  b.grid_max.gamma + b.max_error);
    est = std::max(est, std::min(upper, std::max(a.gamma_e, b.gamma_e)));
  }
  return est;
}

// Grid extrema of one rho-slice with guaranteed bounds on the continuous
// extrema.
EnvelopeEstimate bounded_envelope(const Grid& grid, double rho, double cap) {
  const CellBounds cells(grid, rho, cap);
  double lo = kInf, hi = -kInf, lower = kInf, upper = -kInf;
  for (std::size_t j = 0; j < grid.sizes.n_mag; ++j) {
    const double r = grid.magnitude(cap, j);
    for (std::size_t k = 0; k < grid.sizes.n_phase; ++k) {
      const ComplexGain v = grid.v(cap, j, k);
      const double f = effective_snr_d(grid.s, RelayControl{rho, v});
      const double slack = cells.slack(r, v);
      lo = std::min(lo, f);
      hi = std::max(hi, f);
      lower = std::min(lower, f - slack);
      upper = std::max(upper, f + slack);
      if (j == 0) break;  // every phase gives v = 0
    }
  }
  return EnvelopeEstimate{lo, hi, lo - std::max(0.0, lower), upper - hi};
}

}  // namespace

OracleResult grid_oracle(const Scenario& s, const GridSizes& sizes, unsigned threads) {
  validate(s);
  check_sizes(sizes);
  const Grid grid{s, sizes};
  const std::vector<SliceSummary> slices = summarize_all(grid, threads);

  OracleResult out;
  std::size_t best_slice = 0;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    if (slices[i].any_feasible && (!out.feasible || slices[i].value > out.gamma_d)) {
      out.feasible = true;
      out.gamma_d = slices[i].value;
      best_slice = i;
    }
  }
  if (!out.feasible) return out;

  out.rho_hat = grid.rho(best_slice);
  out.v_hat = slices[best_slice].v_value;
  out.gamma_e = slices[best_slice].gamma_e;
  out.leakage_bps_hz = rate_from_snr(out.gamma_d);
  const double upper = optimum_upper_estimate(slices);
  out.resolution_bound = std::max(0.0, rate_from_snr(upper) - out.leakage_bps_hz);
  return out;
}

void write_oracle_grid_csv(const Scenario& s, const GridSizes& sizes, std::ostream& out) {
  validate(s);
  check_sizes(sizes);
  const Grid grid{s, sizes};
  out << "rho,v_re,v_im,gamma_d,gamma_e,feasible\n";
  char line[256];
  for (std::size_t i = 0; i < sizes.n_rho; ++i) {
    const double rho = grid.rho(i);
    const double cap = max_amplification(s, rho);
    const double ge = eavesdropper_snr(s, rho);
    for (std::size_t j = 0; j < sizes.n_mag; ++j) {
      for (std::size_t k = 0; k < sizes.n_phase; ++k) {
        const ComplexGain v = grid.v(cap, j, k);
        const double gd = effective_snr_d(s, RelayControl{rho, v});
        std::snprintf(line, sizeof line, "%.9g,%.9g,%.9g,%.9g,%.9g,%d\n", rho, v.real(),
                      v.imag(), gd, ge, gd <= ge ? 1 : 0);
        out << line;
      }
    }
  }
  if (!out) throw IoError("failed writing oracle grid CSV");
}

EnvelopeEstimate grid_envelope(const Scenario& s, double rho, std::size_t n_mag,
                               std::size_t n_phase) {
  validate(s);
  const GridSizes sizes{2, n_mag, n_phase};
  check_sizes(sizes);
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw DomainError("power-splitting ratio must lie in [0, 1]");
  }
  return bounded_envelope(Grid{s, sizes}, rho, max_amplification(s, rho));
}

ComplexGain random_feasible_v(const Scenario& s, double rho, CounterRng& rng) {
  const double cap = max_amplification(s, rho);
  const double magnitude = cap * std::sqrt(rng.uniform());
  return std::polar(std::min(magnitude, cap), 2.0 * std::numbers::pi * rng.uniform());
}

std::vector<double> envelope_samples(const Scenario& s, double rho,
                                     std::size_t n_samples, std::uint64_t seed) {
  validate(s);
  std::vector<double> out;
  if (n_samples == 0) return out;
  out.reserve(n_samples);
  out.push_back(effective_snr_d(s, RelayControl{rho, {}}));
  CounterRng rng(seed, 0x656e76ULL);
  while (out.size() < n_samples) {
    out.push_back(effective_snr_d(s, RelayControl{rho, random_feasible_v(s, rho, rng)}));
  }
  return out;
}

double monte_carlo_snr_d(const Scenario& s, const RelayControl& c,
                         std::size_t n_symbols, std::uint64_t seed) {
  validate(s);
  if (n_symbols < 10'000) throw DomainError("monte_carlo_snr_d needs >= 1e4 symbols");
  if (!(c.rho >= 0.0 && c.rho <= 1.0)) {
    throw DomainError("power-splitting ratio must lie in [0, 1]");
  }
  if (relay_power_used(s, c) > s.p_e * (1.0 + 1e-9) && relay_power_used(s, c) > 0.0) {
    throw ConstraintError("relay control exceeds the eavesdropper power budget");
  }

  CounterRng symbols(seed, 0);
  CounterRng relay_noise(seed, 1);
  CounterRng receiver_noise(seed, 2);

  const double sqrt_ps = std::sqrt(s.p_s);
  const double sqrt_rho = std::sqrt(c.rho);
  const ComplexGain signal_coefficient = s.h_sd + c.v * sqrt_rho * s.h_se * s.h_ed;

  double symbol_power = 0.0;
  double noise_power = 0.0;
  for (std::size_t n = 0; n < n_symbols; ++n) {
    const ComplexGain d = symbols.cscg(1.0);
    const ComplexGain n_relay = relay_noise.cscg(s.sigma2);
    const ComplexGain n_d = receiver_noise.cscg(s.sigma2);

    const ComplexGain x_relay = c.v * (sqrt_rho * s.h_se * sqrt_ps * d + n_relay);
    const ComplexGain y_d = s.h_sd * sqrt_ps * d + s.h_ed * x_relay + n_d;

    symbol_power += std::norm(d);
    noise_power += std::norm(y_d - signal_coefficient * sqrt_ps * d);
  }
  symbol_power /= static_cast<double>(n_symbols);
  noise_power /= static_cast<double>(n_symbols);
  return std::norm(signal_coefficient) * s.p_s * symbol_power / noise_power;
}

double monte_carlo_tolerance(std::size_t n_symbols) {
  return 5.0 * std::sqrt(2.0 / static_cast<double>(n_symbols));
}

LabeledScenario random_scenario(std::uint64_t seed, std::uint64_t index,
                                std::optional<StrategyClass> target,
                                const RandomScenarioBounds& bounds) {
  CounterRng rng(seed, (index << 8) | 0x5cULL);
  auto draw_gain = [&] {
    const double magnitude = rng.log_uniform(bounds.gain_min, bounds.gain_max);
    return std::polar(magnitude, rng.uniform(-std::numbers::pi, std::numbers::pi));
  };

  Scenario s;
  std::size_t attempts = 0;
  do {
    s.h_sd = draw_gain();
    s.h_se = draw_gain();
    s.h_ed = draw_gain();
    s.p_s = rng.log_uniform(bounds.power_min, bounds.power_max);
    s.p_e = rng.log_uniform(bounds.power_min, bounds.power_max);
    s.sigma2 = 1.0;
    ++attempts;
  } while (target && classify_case(s) != *target && attempts < 1'000'000);

  if (target && classify_case(s) != *target) {
    throw DomainError("random_scenario: target class unreachable within bounds");
  }
  std::ostringstream label;
  label << "seed=" << seed << " index=" << index
        << " class=" << to_string(classify_case(s));
  return LabeledScenario{s, label.str()};
}

}  // namespace spoofrelay
