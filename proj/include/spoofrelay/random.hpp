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

#ifndef SPOOFRELAY_RANDOM_HPP
#define SPOOFRELAY_RANDOM_HPP

#include <complex>
#include <cstdint>

namespace spoofrelay {

// SplitMix64 run in counter mode.
//
// Stream key:   key = mix64(seed ^ (stream * 0xD1B54A32D192ED03))
// Draw i:       x_i = mix64(key + (i + 1) * 0x9E3779B97F4A7C15)
//
// where mix64 is the SplitMix64 output finalizer. Draw i of a (seed, stream)
// pair is a pure function of (seed, stream, i), so streams can be split,
// skipped or replayed without reference to other streams. Any
// implementation following these two lines reproduces the same sequences.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  // Uniform on (0, 1].
  double uniform_open_zero();

  double uniform(double lo, double hi);

  // 10^U(log10 lo, log10 hi)
  double log_uniform(double lo, double hi);

  // Circularly-symmetric complex Gaussian with E|z|^2 = variance, drawn with
  // the Box-Muller transform from two consecutive uniforms.
  std::complex<double> cscg(double variance = 1.0);

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64_mix(std::uint64_t z);

}  // namespace spoofrelay

#endif  // SPOOFRELAY_RANDOM_HPP
