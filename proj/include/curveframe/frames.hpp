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

#include <optional>
#include <vector>

#include "curveframe/arclength.hpp"
#include "curveframe/tolerances.hpp"
#include "curveframe/vec.hpp"

namespace curveframe {

/// Orthonormal adapted frame, tangent first: {t, n, b} or {t, n1, n2}.
struct Frame {
  Vec3 e1 = Vec3::UnitX();
  Vec3 e2 = Vec3::UnitY();
  Vec3 e3 = Vec3::UnitZ();
};

bool is_orthonormal(const Frame& f, double tol = default_tolerances().orthonormality);

enum class FrameKind { frenet, rm };

/// Frames sampled on a uniform arc-length grid. For kind == rm, k1 and k2
/// are the rotation-minimizing curvatures; for kind == frenet they hold
/// curvature and torsion.
struct FrameField {
  FrameKind kind = FrameKind::rm;
  std::vector<double> ss;
  std::vector<Vec3> points;
  std::vector<Frame> frames;
  std::vector<double> k1;
  std::vector<double> k2;
  /// Angle from the Frenet normal to n1 (quadrature fields only).
  std::vector<double> theta;

  std::size_t size() const { return ss.size(); }
  double spacing() const { return ss.size() > 1 ? ss[1] - ss[0] : 0.0; }
};

struct FrenetApparatus {
  double kappa = 0.0;
  /// Unset at inflection points or when the jet lacks third derivatives.
  std::optional<double> tau;
  /// Unset at inflection points.
  std::optional<Frame> frame;

  bool is_inflection() const { return !frame.has_value(); }
};

/// Frenet frame, curvature and torsion from a jet in any regular parameter.
FrenetApparatus frenet_apparatus(const Jet& jet,
                                 const Tolerances& tol = default_tolerances());

/// Starting frame for RM propagation: Frenet frame when defined, otherwise
/// the normalized component of the x (then y, then z) axis orthogonal to t.
Frame default_initial_frame(const Jet& jet, const Tolerances& tol = default_tolerances());

/// n samples including both ends. Throws CurveError(inflection) naming s.
FrameField frenet_field(const ArcLengthCurve& curve, int n,
                        const Tolerances& tol = default_tolerances());

/// RM frame from theta(s) = theta0 + integral of tau, n1 = cos(theta) n - sin(theta) b.
FrameField rmf_by_quadrature(const ArcLengthCurve& curve, int n, double theta0 = 0.0,
                             const Tolerances& tol = default_tolerances());

/// Double reflection propagation from `initial` along uniform arc-length samples.
FrameField rmf_by_double_reflection(const ArcLengthSamples& samples, const Frame& initial);
/// Same, on n samples including both ends with default_initial_frame.
FrameField rmf_by_double_reflection(const ArcLengthCurve& curve, int n,
                                    const Tolerances& tol = default_tolerances());

struct NormalDevelopment {
  std::vector<double> ss;
  std::vector<Vec2> points;
};

NormalDevelopment normal_development(const FrameField& field);

/// max over interior samples of |<n1', n2>|.
double rm_defect(const FrameField& field);

/// Rotates the normal pair by `angle` about the tangent (the RM gauge freedom).
FrameField rotate_gauge(const FrameField& field, double angle);

}  // namespace curveframe
