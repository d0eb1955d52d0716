// Copyright 2026 The curveframe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "curveframe/error.hpp"
#include "curveframe/stencil.hpp"

namespace curveframe {
namespace {

TEST(Stencil, FornbergReproducesClassicCentralWeights) {
  const std::vector<double> nodes = {-2, -1, 0, 1, 2};
  const auto w1 = fd_weights(nodes, 0.0, 1);
  const double e1[] = {1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
  const auto w2 = fd_weights(nodes, 0.0, 2);
  const double e2[] = {-1.0 / 12, 4.0 / 3, -2.5, 4.0 / 3, -1.0 / 12};
  for (int i = 0; i < 5; ++i) {
    EXPECT_NEAR(w1[i], e1[i], 1e-15);
    EXPECT_NEAR(w2[i], e2[i], 1e-14);
  }
}

TEST(Stencil, WeightsAnnihilateLowDegreePolynomials) {
  const std::vector<double> nodes = {0, 1, 2, 3, 4, 5};
  const auto w = fd_weights(nodes, 0.0, 3);
  for (int p = 0; p <= 5; ++p) {
    double acc = 0.0;
    for (int i = 0; i < 6; ++i) acc += w[i] * std::pow(nodes[i], p);
    EXPECT_NEAR(acc, p == 3 ? 6.0 : 0.0, 1e-10) << "degree " << p;
  }
}

// Max error of the derivative of sin(2x) on [-2, 2]; `interior` keeps only
// nodes at least 5 away from either end, where the central stencil applies.
double max_error(int n, int order, int accuracy, bool interior) {
  const double h = 2.0 / (n - 1);
  std::vector<double> f(n);
  for (int i = 0; i < n; ++i) f[i] = std::sin(2.0 * (-1.0 + i * h));
  const auto d = differentiate(std::span<const double>(f), h, order, accuracy);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    if (interior != (i >= 5 && i <= n - 6)) continue;
    const double x = 2.0 * (-1.0 + i * h);
    const double exact = std::pow(2.0, order) * std::sin(x + order * M_PI / 2);
    worst = std::max(worst, std::abs(d[i] - exact));
  }
  return worst;
}

// Richardson check: halving h twice shrinks the error at the scheme's order.
TEST(Stencil, ConvergesAtDesignOrder) {
  for (int order = 1; order <= 3; ++order) {
    for (int accuracy : {kDefaultAccuracy, kHighAccuracy}) {
      const double e1 = max_error(21, order, accuracy, true);
      const double e2 = max_error(41, order, accuracy, true);
      const double e3 = max_error(81, order, accuracy, true);
      EXPECT_GT(std::log2(e1 / e2), accuracy - 0.3) << "order " << order << " accuracy " << accuracy;
      EXPECT_GT(std::log2(e2 / e3), accuracy - 0.3) << "order " << order << " accuracy " << accuracy;
    }
  }
}

// One-sided end stencils carry larger constants; on these grids they are still
// approaching their asymptotic rate, so only steady decrease is required.
TEST(Stencil, EndStencilsConverge) {
  for (int order = 1; order <= 3; ++order) {
    for (int accuracy : {kDefaultAccuracy, kHighAccuracy}) {
      double previous = max_error(11, order, accuracy, false);
      for (int n : {21, 41, 81}) {
        const double e = max_error(n, order, accuracy, false);
        EXPECT_LT(e, previous / 4) << "order " << order << " accuracy " << accuracy << " n " << n;
        previous = e;
      }
    }
  }
}

TEST(Stencil, VectorDifferentiationMatchesScalar) {
  const int n = 64;
  const double h = 0.05;
  std::vector<Vec3> v(n);
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) {
    x[i] = std::exp(0.3 * i * h);
    v[i] = Vec3(x[i], 2 * x[i], -x[i]);
  }
  const auto dv = differentiate(std::span<const Vec3>(v), h, 2);
  const auto dx = differentiate(std::span<const double>(x), h, 2);
  for (int i = 0; i < n; ++i) EXPECT_NEAR((dv[i] - Vec3(dx[i], 2 * dx[i], -dx[i])).norm(), 0, 1e-12);
}

TEST(Stencil, CentralDerivativeOfFunction) {
  const auto f = [](double x) { return std::exp(x); };
  for (int order = 1; order <= 3; ++order) {
    EXPECT_NEAR(central_derivative(f, 0.4, 1e-2, order), std::exp(0.4), 1e-7);
  }
}

TEST(Stencil, RejectsTooFewSamples) {
  const std::vector<double> f(4, 1.0);
  EXPECT_THROW(differentiate(std::span<const double>(f), 0.1, 3), CurveError);
}

}  // namespace
}  // namespace curveframe
