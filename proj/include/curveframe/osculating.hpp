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

#include <array>
#include <span>
#include <vector>

#include "curveframe/frames.hpp"

namespace curveframe {

/// Default finite-difference step (arc length) for pointwise derivatives.
inline constexpr double kDefaultStep = 1e-3;

struct OsculatingSphere {
  double s0 = 0.0;
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
};

/// Center alpha + rho n + (rho'/tau) b and radius sqrt(rho^2 + (rho'/tau)^2).
/// `kappa_prime` is dkappa/ds. Throws inflection / zero-torsion errors.
OsculatingSphere osculating_sphere_frenet(const Jet& jet, double kappa, double tau,
                                          double kappa_prime,
                                          const Tolerances& tol = default_tolerances());

/// Sphere in RM coordinates: center = position + beta1 n1 + beta2 n2 with
/// k1 beta1 + k2 beta2 = 1 and k1' beta1 + k2' beta2 = 0.
OsculatingSphere osculating_sphere_rm(double k1, double k2, double k1_prime, double k2_prime,
                                      const Frame& frame, const Vec3& position,
                                      const Tolerances& tol = default_tolerances());

/// g, g', g'', g''' at the contact point for g(s) = |P - alpha(s)|^2 - R^2,
/// differentiated analytically from an arc-length jet of order >= 3.
std::array<double, 4> contact_residuals(const OsculatingSphere& sphere, const Jet& unit_jet);

/// Frenet data and its arc-length derivatives at one point. Derivatives of
/// curvature and torsion come from a 7-point stencil of step h that slides
/// inward near the ends of the curve.
struct LocalGeometry {
  double s = 0.0;
  Jet unit_jet;  // derivatives with respect to arc length, order 3
  Frame frame;   // {t, n, b}
  double kappa = 0.0;
  double tau = 0.0;
  double kappa_prime = 0.0;
  double tau_prime = 0.0;
  double rho = 0.0;
  double rho_prime = 0.0;
  double rho_second = 0.0;
  /// tau rho + d/ds (rho' / tau)
  double sigma = 0.0;
  OsculatingSphere sphere;
};

LocalGeometry local_geometry(const ArcLengthCurve& curve, double s, double h = kDefaultStep,
                             const Tolerances& tol = default_tolerances());

/// dP_S/ds by central differences of the osculating center.
Vec3 osculating_center_velocity(const ArcLengthCurve& curve, double s, double h = kDefaultStep,
                                const Tolerances& tol = default_tolerances());

struct SphericalDeviation {
  std::vector<double> ss;
  std::vector<double> sigma;
};

/// sigma = tau rho + d/ds(rho'/tau) on a uniform grid. Throws zero-torsion
/// when |tau| <= tol.torsion at any sample.
SphericalDeviation spherical_deviation(std::span<const double> rho,
                                       std::span<const double> rho_prime,
                                       std::span<const double> tau, std::span<const double> ss,
                                       const Tolerances& tol = default_tolerances());

/// Samples rho, tau on n points and evaluates spherical_deviation.
SphericalDeviation spherical_deviation(const ArcLengthCurve& curve, int n,
                                       const Tolerances& tol = default_tolerances());

/// Osculating spheres on the uniform n-point grid, with kappa' by finite
/// differences on that grid. Samples where the sphere is undefined are skipped.
struct OsculatingSeries {
  std::vector<double> ss;
  std::vector<Vec3> centers;
  std::vector<double> radii;
  std::vector<double> sigma;
};

OsculatingSeries osculating_series(const ArcLengthCurve& curve, int n,
                                   const Tolerances& tol = default_tolerances());

struct SphereNormalDerivative {
  Vec3 lhs = Vec3::Zero();  // finite differences of (alpha - P_S) / R_S
  Vec3 rhs = Vec3::Zero();  // closed form in the Frenet frame
  double residual = 0.0;
};

SphereNormalDerivative sphere_normal_derivative_check(const ArcLengthCurve& curve, double s,
                                                      double h = kDefaultStep,
                                                      const Tolerances& tol = default_tolerances());

/// Samples of the osculating spherical projection
/// beta = a0 + r0 (alpha - a0) / |alpha - a0| around s0.
struct OsculatingProjection {
  double s0 = 0.0;
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
  double spacing = 0.0;
  std::vector<double> ss;
  std::vector<Vec3> points;
  /// beta - alpha per sample, formed without cancellation against the radius.
  std::vector<Vec3> corrections;
};

OsculatingProjection osculating_projection(const ArcLengthCurve& curve, double s0,
                                           double halfwidth, int n,
                                           const Tolerances& tol = default_tolerances());

struct Theorem3Check {
  double kappa_alpha = 0.0;
  double kappa_beta = 0.0;
  double tau_alpha = 0.0;
  double tau_beta = 0.0;
  /// <alpha - P_S(s0), alpha' x alpha''> at s0
  double J = 0.0;
  /// dJ/ds with the osculating center moving along the curve (finite differences).
  double J_prime = 0.0;
  /// <alpha - P_S, alpha' x alpha'''> - kappa sigma, the same rate in closed form.
  double J_prime_closed_form = 0.0;
  double sigma = 0.0;
  double radius = 0.0;
  /// |tau_alpha - J'/(1+J^2) - kappa sigma/(1+J^2)|
  double tau_decomposition_residual = 0.0;
  /// max over orders 0..3 of |beta^(k)(s0) - alpha^(k)(s0)|; beta's
  /// derivatives are alpha's plus finite differences of the corrections.
  double contact_order_error = 0.0;
};

/// Default projection window: 0.05 of the curve length, 401 samples.
Theorem3Check theorem3_check(const ArcLengthCurve& curve, double s0, double halfwidth = -1.0,
                             int n = 401, const Tolerances& tol = default_tolerances());

}  // namespace curveframe
