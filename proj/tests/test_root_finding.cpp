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


#include "spoofrelay/root_finding.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "spoofrelay/random.hpp"

namespace spoofrelay {
namespace {

auto any_residual = [](double, double) { return true; };

TEST(Bisection, ReturnsInsideEndpoint) {
  auto f = [](double x) { return x - 0.3; };
  const double left = bisect_boundary(f, 0.0, 1.0, any_residual);
  EXPECT_LE(f(left), 0.0);
  EXPECT_NEAR(left, 0.3, 1e-12);
  // Reversed orientation: inside on the right.
  auto g = [](double x) { return 0.3 - x; };
  const double right = bisect_boundary(g, 1.0, 0.0, any_residual);
  EXPECT_LE(g(right), 0.0);
  EXPECT_NEAR(right, 0.3, 1e-12);
}

TEST(Bisection, ResidualRuleKeepsGoingPastWidth) {
  // Steep function: the x-width test alone would stop with |f| ~ 1e-4.
  auto f = [](double x) { return 1e8 * (x - 0.123456789); };
  const double x = bisect_boundary(
      f, 0.0, 1.0, [](double, double fx) { return std::abs(fx) <= 1e-6; },
      BisectionOptions{1e-12, 200});
  EXPECT_LE(std::abs(f(x)), 1e-6);
}

TEST(Bisection, StopsWhenBracketCannotSplit) {
  auto f = [](double x) { return x < 0.5 ? -1.0 : 1.0; };  // jump, never small
  const double x = bisect_boundary(
      f, 0.0, 1.0, [](double, double fx) { return std::abs(fx) < 1e-3; });
  EXPECT_LT(x, 0.5);
  EXPECT_EQ(std::nextafter(x, 1.0), 0.5);
}

TEST(Bisection, RespectsIterationCap) {
  int calls = 0;
  auto f = [&](double x) {
    ++calls;
    return x - 0.7;
  };
  bisect_boundary(f, 0.0, 1.0, any_residual, BisectionOptions{0.0, 10});
  EXPECT_EQ(calls, 11);
}

TEST(PolynomialRoots, KnownQuartic) {
  // (x - 0.1)(x - 0.4)(x + 2)(x - 3) expanded, ascending powers.
  const std::vector<double> c = {-0.24, 2.96, -5.46, -1.5, 1.0};
  const std::vector<double> r = real_polynomial_roots(c);
  ASSERT_EQ(r.size(), 4u);
  EXPECT_NEAR(r[0], -2.0, 1e-12);
  EXPECT_NEAR(r[1], 0.1, 1e-12);
  EXPECT_NEAR(r[2], 0.4, 1e-12);
  EXPECT_NEAR(r[3], 3.0, 1e-12);
}

TEST(PolynomialRoots, ComplexPairsDropped) {
  const std::vector<double> c = {1.0, 0.0, 1.0};  // x^2 + 1
  EXPECT_TRUE(real_polynomial_roots(c).empty());
  const std::vector<double> d = {-2.0, 1.0, 0.0, 0.0};  // trailing zeros
  const std::vector<double> r = real_polynomial_roots(d);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_DOUBLE_EQ(r[0], 2.0);
  EXPECT_TRUE(real_polynomial_roots(std::vector<double>{0.0, 0.0}).empty());
}

TEST(PolynomialRoots, RandomFactoredPolynomials) {
  CounterRng rng(5, 0);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> roots(static_cast<std::size_t>(rng.uniform(1.0, 5.0)));
    for (double& x : roots) x = rng.uniform(-3.0, 3.0);
    std::sort(roots.begin(), roots.end());
    bool separated = true;
    for (std::size_t i = 1; i < roots.size(); ++i) separated &= roots[i] - roots[i - 1] > 0.05;
    if (!separated) continue;

    std::vector<double> coeffs{1.0};
    for (double x : roots) {
      std::vector<double> next(coeffs.size() + 1, 0.0);
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        next[k] -= x * coeffs[k];
        next[k + 1] += coeffs[k];
      }
      coeffs = next;
    }
    const std::vector<double> found = real_polynomial_roots(coeffs);
    ASSERT_EQ(found.size(), roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) EXPECT_NEAR(found[i], roots[i], 1e-9);
  }
}

TEST(Polynomial, Horner) {
  const std::vector<double> c = {1.0, -2.0, 3.0};
  EXPECT_DOUBLE_EQ(evaluate_polynomial(c, 2.0), 9.0);
  EXPECT_DOUBLE_EQ(evaluate_polynomial(std::vector<double>{}, 2.0), 0.0);
}

}  // namespace
}  // namespace spoofrelay
