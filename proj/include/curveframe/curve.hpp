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
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "curveframe/vec.hpp"

namespace curveframe {

/// Default regularity threshold on the speed |alpha'(t)|.
inline constexpr double kDefaultRegularityEps = 1e-9;

enum class CurveFamily {
  circle,
  helix,
  spherical_fourier,
  polynomial,
  bezier,
  polyline,
  ellipse,
  fourier,
};

std::string to_string(CurveFamily family);

/// f(t) = constant + linear * t + sum_k cos[k] cos((k+1) omega t) + sin[k] sin((k+1) omega t)
struct FourierSeries {
  double constant = 0.0;
  double linear = 0.0;
  double omega = 1.0;
  std::vector<double> cos;
  std::vector<double> sin;
};

/// Vector-valued variant of FourierSeries.
struct VecFourierSeries {
  Vec3 constant = Vec3::Zero();
  Vec3 linear = Vec3::Zero();
  double omega = 1.0;
  std::vector<Vec3> cos;
  std::vector<Vec3> sin;
};

/// center + radius (cos(omega t + phase) u + sin(omega t + phase) v)
struct CircleParams {
  Vec3 center = Vec3::Zero();
  double radius = 1.0;
  double omega = 1.0;
  double phase = 0.0;
  Vec3 u = Vec3::UnitX();
  Vec3 v = Vec3::UnitY();
};

/// (a cos t, a sin t, b t)
struct HelixParams {
  double a = 1.0;
  double b = 1.0;
};

/// center + semi_a cos(t) u + semi_b sin(t) v
struct EllipseParams {
  Vec3 center = Vec3::Zero();
  double semi_a = 2.0;
  double semi_b = 1.0;
  Vec3 u = Vec3::UnitX();
  Vec3 v = Vec3::UnitY();
};

/// center + radius (sin phi cos lambda, sin phi sin lambda, cos phi)
struct SphericalFourierParams {
  Vec3 center = Vec3::Zero();
  double radius = 1.0;
  FourierSeries polar;
  FourierSeries azimuth;
};

/// sum_k coefficients[k] t^k
struct PolynomialParams {
  std::vector<Vec3> coefficients;
};

/// Bezier curve on u = (t - t0) / (t1 - t0).
struct BezierParams {
  std::vector<Vec3> control_points;
};

struct PolylineParams {
  std::vector<Vec3> points;
};

struct FourierCurveParams {
  VecFourierSeries series;
};

using CurveParams = std::variant<CircleParams, HelixParams, SphericalFourierParams,
                                 PolynomialParams, BezierParams, PolylineParams, EllipseParams,
                                 FourierCurveParams>;

/// Optional rigid motion applied after evaluating the family: x -> R x + translation.
struct RigidMotion {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Vec3 translation = Vec3::Zero();

  bool is_identity() const {
    return rotation.isIdentity(0.0) && translation.isZero(0.0);
  }
};

struct CurveSpec {
  std::string name;
  CurveParams params;
  double t0 = 0.0;
  double t1 = 1.0;
  RigidMotion motion;
  double regularity_eps = kDefaultRegularityEps;

  CurveFamily family() const;
};

/// Position and derivatives d[0..order] of a curve at parameter t.
struct Jet {
  double t = 0.0;
  std::array<Vec3, 5> d{Vec3::Zero(), Vec3::Zero(), Vec3::Zero(), Vec3::Zero(), Vec3::Zero()};
  int order = 0;

  const Vec3& position() const { return d[0]; }
  double speed() const { return d[1].norm(); }
};

/// Converts a jet to derivatives with respect to arc length. The result has
/// unit-speed first derivative and the same order.
Jet unit_speed_jet(const Jet& jet);

namespace detail {
struct PolylineData;
}

/// An evaluable curve built from a CurveSpec. Analytic families produce
/// closed-form derivatives; polylines are smoothed, resampled to uniform arc
/// length and differentiated with finite differences.
class Curve {
 public:
  explicit Curve(CurveSpec spec);

  const CurveSpec& spec() const { return spec_; }
  double t0() const { return t0_; }
  double t1() const { return t1_; }
  /// Highest derivative order this curve can supply.
  int max_order() const;

  /// Throws CurveError(domain) outside [t0, t1] and CurveError(regularity)
  /// when |alpha'(t)| <= regularity_eps.
  Jet jet(double t, int order) const;
  Vec3 position(double t) const { return jet(t, 0).d[0]; }

 private:
  Jet raw_jet(double t, int order) const;

  CurveSpec spec_;
  double t0_ = 0.0;
  double t1_ = 1.0;
  std::shared_ptr<const detail::PolylineData> polyline_;
};

inline Jet evaluate_jet(const Curve& curve, double t, int order) { return curve.jet(t, order); }

}  // namespace curveframe
