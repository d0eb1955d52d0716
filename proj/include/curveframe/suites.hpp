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

// Seeded random curve families used by the verification suites.

#include <cstdint>
#include <random>
#include <vector>

#include "curveframe/curve.hpp"

namespace curveframe {

/// Platform-independent uniform draws on top of std::mt19937_64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }
  Vec3 uniform_vec(double lo, double hi) {
    const double x = uniform(lo, hi);
    const double y = uniform(lo, hi);
    const double z = uniform(lo, hi);
    return Vec3(x, y, z);
  }
  Eigen::Matrix3d rotation();

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Closed spherical_fourier curves, radius in [0.5, 5], 3 modes per angle.
std::vector<CurveSpec> spherical_suite(std::uint64_t seed, int count = 20);

/// Twisted curves (kappa > 0, tau != 0 everywhere): rigidly moved helices
/// alternating with cubic polynomial arcs.
std::vector<CurveSpec> twisted_suite(std::uint64_t seed, int count = 10);

/// Plane curves (ellipses, parabolic arcs, Fourier plane curves) rigidly
/// rotated into random planes.
std::vector<CurveSpec> plane_suite(std::uint64_t seed, int count = 10);

/// Helix (a cos t, a sin t, b t) on [0, 2 pi turns].
CurveSpec make_helix(double a, double b, double turns = 1.0);
/// Circle of radius r in the xy-plane centered at the origin on [0, 2 pi].
CurveSpec make_circle(double r);

}  // namespace curveframe
