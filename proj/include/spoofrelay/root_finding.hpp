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

#ifndef SPOOFRELAY_ROOT_FINDING_HPP
#define SPOOFRELAY_ROOT_FINDING_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace spoofrelay {

struct BisectionOptions {
  double x_tolerance = 1e-12;
  std::size_t max_iterations = 200;
};

// Bisects a bracket with f(inside) <= 0 < f(outside) and returns the
// endpoint on the f <= 0 side. Iteration stops once the bracket is narrower
// than x_tolerance and residual_ok(x, f(x)) holds at the returned endpoint,
// when the bracket can no longer be split in double precision, or after
// max_iterations halvings.
template <typename F, typename Accept>
double bisect_boundary(F&& f, double inside, double outside, Accept&& residual_ok,
                       const BisectionOptions& opts = {}) {
  double f_inside = f(inside);
  for (std::size_t it = 0; it < opts.max_iterations; ++it) {
    if (std::abs(outside - inside) <= opts.x_tolerance &&
        residual_ok(inside, f_inside)) {
      break;
    }
    const double mid = 0.5 * (inside + outside);
    if (mid == inside || mid == outside) break;
    const double f_mid = f(mid);
    if (f_mid <= 0.0) {
      inside = mid;
      f_inside = f_mid;
    } else {
      outside = mid;
    }
  }
  return inside;
}

// Real roots of sum_k coeffs[k] x^k, ascending order of powers. Roots come
// from the eigenvalues of the companion matrix, are polished with Newton
// steps on the original polynomial and returned sorted. Leading zero
// coefficients are stripped; the zero polynomial yields no roots.
std::vector<double> real_polynomial_roots(std::span<const double> coeffs,
                                          double imag_tolerance = 1e-7);

double evaluate_polynomial(std::span<const double> coeffs, double x);

}  // namespace spoofrelay

#endif  // SPOOFRELAY_ROOT_FINDING_HPP
