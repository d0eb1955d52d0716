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

// Tube surfaces swept along a frame field.

#include <array>
#include <string>
#include <vector>

#include "curveframe/frames.hpp"

namespace curveframe {

inline constexpr int kDefaultTubeSegments = 32;

struct TubeMesh {
  std::vector<Vec3> vertices;
  /// Zero-based vertex indices, counter-clockwise seen from outside.
  std::vector<std::array<int, 3>> triangles;
};

/// Circular cross sections of `radius` in the (e2, e3) plane of every frame.
TubeMesh sweep_tube(const FrameField& field, double radius,
                    int segments = kDefaultTubeSegments);

/// Signed rotation of e2 about the tangent, accumulated along the field,
/// relative to parallel transport between consecutive tangents. Zero up to
/// discretization for rotation-minimizing fields; equals the integral of
/// torsion for Frenet fields.
double total_twist(const FrameField& field);

/// Wavefront OBJ text with one-based face indices.
std::string to_obj(const TubeMesh& mesh, const std::string& comment = {});

}  // namespace curveframe
