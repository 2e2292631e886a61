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

#include "spoofrelay/random.hpp"

#include <cmath>
#include <numbers>

namespace spoofrelay {

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64_mix(seed ^ (stream * 0xD1B54A32D192ED03ULL))) {}

std::uint64_t CounterRng::next_u64() {
  ++counter_;
  return splitmix64_mix(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
}

double CounterRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform_open_zero() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double CounterRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double CounterRng::log_uniform(double lo, double hi) {
  return std::pow(10.0, uniform(std::log10(lo), std::log10(hi)));
}

std::complex<double> CounterRng::cscg(double variance) {
  const double u1 = uniform_open_zero();
  const double u2 = uniform();
  // |z|^2 = -variance * ln(u1) is exponential with mean variance.
  const double r = std::sqrt(-variance * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace spoofrelay
