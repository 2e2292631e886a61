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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "spoofrelay/root_finding.hpp"

namespace spoofrelay {
namespace {

double evaluate_derivative(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 1;) {
    acc = acc * x + static_cast<double>(k) * coeffs[k];
  }
  return acc;
}

double polish(std::span<const double> coeffs, double x) {
  for (int i = 0; i < 8; ++i) {
    const double d = evaluate_derivative(coeffs, x);
    if (d == 0.0) break;
    const double step = evaluate_polynomial(coeffs, x) / d;
    const double next = x - step;
    if (!std::isfinite(next)) break;
    // Keep the step only if it does not increase the residual.
    if (std::abs(evaluate_polynomial(coeffs, next)) >
        std::abs(evaluate_polynomial(coeffs, x))) {
      break;
    }
    x = next;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
  }
  return x;
}

}  // namespace

double evaluate_polynomial(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

std::vector<double> real_polynomial_roots(std::span<const double> coeffs,
                                          double imag_tolerance) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == 0.0) --n;
  const std::span<const double> poly = coeffs.first(n);
  if (n <= 1) return {};

  const auto degree = static_cast<Eigen::Index>(n - 1);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (Eigen::Index i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < degree; ++i) {
    companion(i, degree - 1) = -poly[static_cast<std::size_t>(i)] / poly[n - 1];
  }

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<double> roots;
  for (const auto& lambda : solver.eigenvalues()) {
    if (std::abs(lambda.imag()) <= imag_tolerance * (1.0 + std::abs(lambda.real()))) {
      roots.push_back(polish(poly, lambda.real()));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace spoofrelay
