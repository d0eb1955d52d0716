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

#include <span>
#include <string>
#include <vector>

#include "curveframe/frames.hpp"

namespace curveframe {

struct PlaneFit {
  Vec3 point = Vec3::Zero();
  Vec3 normal = Vec3::UnitZ();
  /// RMS of signed distances to the plane.
  double rms_residual = 0.0;
};

/// Total-least-squares plane: centroid plus the least principal direction.
/// Throws CurveError(degenerate_fit) for collinear samples.
PlaneFit fit_plane(std::span<const Vec3> samples);

/// alpha - p = A t + B n1 + (out of plane) n2, and the residuals of
/// A' - k1 B = 1, B' + k1 A = 0, k2 A = 0.
struct RMPlaneDecomposition {
  std::vector<double> ss;
  std::vector<double> A;
  std::vector<double> B;
  std::vector<double> out_of_plane;
  std::vector<double> residual_tangent;  // A' - k1 B - 1
  std::vector<double> residual_normal;   // B' + k1 A
  std::vector<double> residual_binormal; // k2 A

  /// Largest absolute residual over the three equations and all samples.
  double max_residual() const;
};

RMPlaneDecomposition rm_plane_decomposition(const FrameField& field, const Vec3& p);

enum class PlanarityVerdict { planar, not_planar, indeterminate };

std::string to_string(PlanarityVerdict verdict);

struct PlanarityReport {
  PlanarityVerdict verdict = PlanarityVerdict::indeterminate;
  PlaneFit plane;
  double diameter = 0.0;
  /// Planar branch: the translation p and gauge used for the certificate.
  Vec3 anchor = Vec3::Zero();
  double gauge_angle = 0.0;
  double system_residual = 0.0;
  /// Non-planar branch: min over the p grid of max |k2 A|, per tested gauge.
  std::vector<double> gauges;
  std::vector<double> gauge_certificates;
  double certificate = 0.0;
  Vec3 certificate_point = Vec3::Zero();
};

/// Plane curves are certified constructively (p on the fitted plane, RM gauge
/// with n2 along the plane normal). Other curves get a violation certificate
/// computed over a refined 5x5x5 grid of translations within the bounding
/// box, for `gauge_count` equally spaced gauge rotations.
PlanarityReport theorem4_verdict(const FrameField& field,
                                 const Tolerances& tol = default_tolerances(),
                                 int gauge_count = 8);

}  // namespace curveframe
