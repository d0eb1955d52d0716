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

#pragma once

// Finite-difference stencils on uniform grids. Interior nodes use the
// symmetric stencil of the requested accuracy order (5 points for first and
// second derivatives at fourth order, 7 for third); near the ends the stencil
// slides inward and widens to m + accuracy points.

#include <functional>
#include <span>
#include <vector>

#include "curveframe/vec.hpp"

namespace curveframe {

/// Fornberg weights for the `order`-th derivative at `x0` from values at `nodes`.
std::vector<double> fd_weights(std::span<const double> nodes, double x0, int order);

inline constexpr int kDefaultAccuracy = 4;
inline constexpr int kHighAccuracy = 6;

/// Points in the symmetric stencil for the `order`-th derivative at `accuracy`.
int central_width(int order, int accuracy);

/// Derivative of `order` 1..3 of uniformly spaced samples with spacing `h`,
/// with truncation error O(h^accuracy).
std::vector<double> differentiate(std::span<const double> values, double h, int order,
                                  int accuracy = kDefaultAccuracy);
std::vector<Vec3> differentiate(std::span<const Vec3> values, double h, int order,
                                int accuracy = kDefaultAccuracy);

/// Fourth-order central derivative of `order` 1..3 at `x` with step `h`.
double central_derivative(const std::function<double(double)>& f, double x, double h,
                          int order);
Vec3 central_derivative(const std::function<Vec3(double)>& f, double x, double h, int order);

}  // namespace curveframe
