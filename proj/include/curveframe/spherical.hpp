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
#include <utility>
#include <vector>

#include "curveframe/frames.hpp"

namespace curveframe {

/// Sphere through sample points.
struct SphereFit {
  Vec3 center = Vec3::Zero();
  double radius = 1.0;
  /// Root mean square of |x - center| - radius over the samples.
  double rms_residual = 0.0;
};

/// Algebraic least-squares sphere |x|^2 + b.x + c = 0 on centered, scaled
/// samples. Throws CurveError(degenerate_fit) when the design matrix is
/// ill-conditioned (coplanar samples).
SphereFit fit_sphere(std::span<const Vec3> samples, const Tolerances& tol = default_tolerances());

/// <alpha - p, alpha' x alpha''> / |alpha'|^3; parametrization invariant.
double spherical_curvature(const Jet& jet, const Vec3& p);

/// <alpha - p, alpha' x alpha'''> for an arc-length jet; equals dJ/ds on a sphere centered at p.
double spherical_curvature_rate(const Jet& unit_jet, const Vec3& p);

/// Curvature sqrt(1 + J^2) / r and torsion J' / (1 + J^2) of a curve on a sphere of radius r.
std::pair<double, double> kappa_tau_from_J(double J, double J_prime, double r);

/// Angle between the principal normal and an RM vector, up to a constant.
double rm_angle_from_J(double J);

/// ((alpha - p)/r, t, ((alpha - p)/r) x t). Throws CurveError(sphericality)
/// when alpha is off the sphere.
Frame saban_frame(const Jet& jet, const Vec3& p, double r,
                  const Tolerances& tol = default_tolerances());

struct SphericalCurvatureSeries {
  std::vector<double> ss;
  std::vector<double> J;
  std::vector<double> J_prime;  // dJ/ds by finite differences
};

SphericalCurvatureSeries spherical_curvature_series(const ArcLengthCurve& curve, const Vec3& p,
                                                    int n);

/// Exact RM frame of a spherical curve: n1 = (alpha - p)/r, n2 = t x n1.
/// Curvatures are read off the second derivative: k1 = -1/r and k2 = -J/r.
FrameField spherical_rmf(const ArcLengthCurve& curve, const SphereFit& fit, int n,
                         const Tolerances& tol = default_tolerances());

struct SphericalityVerdict {
  bool spherical = false;
  /// 1 / distance when spherical.
  double radius = 0.0;
  /// Distance from the fitted development line to the origin.
  double distance = 0.0;
  /// RMS perpendicular residual of the line fit.
  double line_residual = 0.0;
  /// max |(k1, k2)| over the development.
  double max_norm = 0.0;
  Vec2 centroid = Vec2::Zero();
  Vec2 direction = Vec2::UnitX();
  /// Unit normal of the line oriented away from the origin.
  Vec2 normal = Vec2::UnitY();
  /// All development points coincide; the line is taken perpendicular to the
  /// point's position, which gives the smallest sphere.
  bool degenerate = false;
};

/// Total-least-squares line through the normal development; spherical iff the
/// residual is small and the line misses the origin.
SphericalityVerdict sphericality_test(const NormalDevelopment& dev,
                                      const Tolerances& tol = default_tolerances());

/// Sphere recovered from an RM field and its development line: the center is
/// alpha + (n1, n2) . normal / distance averaged over samples.
SphereFit sphere_from_development(const FrameField& field, const SphericalityVerdict& verdict);

}  // namespace curveframe
