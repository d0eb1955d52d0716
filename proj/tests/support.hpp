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

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "curveframe/arclength.hpp"
#include "curveframe/curve.hpp"
#include "curveframe/suites.hpp"

namespace curveframe::testing {

inline constexpr double kPi = std::numbers::pi;

inline CurveSpec spec_of(std::string name, CurveParams params, double t0, double t1) {
  CurveSpec spec;
  spec.name = std::move(name);
  spec.params = std::move(params);
  spec.t0 = t0;
  spec.t1 = t1;
  return spec;
}

/// Circle of radius r about `center` in the plane spanned by u, v.
inline CurveSpec circle(double r, Vec3 center = Vec3::Zero(), Vec3 u = Vec3::UnitX(),
                        Vec3 v = Vec3::UnitY()) {
  CircleParams c;
  c.radius = r;
  c.center = center;
  c.u = u;
  c.v = v;
  return spec_of("circle", c, 0.0, 2.0 * kPi);
}

/// Circle at constant polar angle phi on the sphere (p, r), azimuth = speed * t.
inline CurveSpec small_circle(double phi, double r = 1.0, Vec3 p = Vec3::Zero(),
                              double speed = 1.0) {
  SphericalFourierParams s;
  s.center = p;
  s.radius = r;
  s.polar.constant = phi;
  s.azimuth.linear = speed;
  return spec_of("small-circle", s, 0.0, 2.0 * kPi / speed);
}

/// Spherical curve with polar angle 1.2 + 0.3 cos t + 0.1 sin t and azimuth t.
inline CurveSpec wobbly_sphere(Vec3 p = Vec3(0.3, -0.2, 0.1), double r = 2.0) {
  SphericalFourierParams s;
  s.center = p;
  s.radius = r;
  s.polar.constant = 1.2;
  s.polar.cos = {0.3};
  s.polar.sin = {0.1};
  s.azimuth.linear = 1.0;
  return spec_of("wobbly-sphere", s, 0.0, 2.0 * kPi);
}

/// (t, t^2, t^3) on [t0, t1].
inline CurveSpec twisted_cubic(double t0 = 0.0, double t1 = 1.0) {
  PolynomialParams p;
  p.coefficients = {Vec3::Zero(), Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
  return spec_of("twisted-cubic", p, t0, t1);
}

inline CurveSpec segment(Vec3 from, Vec3 to) {
  PolynomialParams p;
  p.coefficients = {from, to - from};
  return spec_of("segment", p, 0.0, 1.0);
}

inline CurveSpec ellipse(double a, double b, Vec3 center = Vec3::Zero(),
                         Vec3 u = Vec3::UnitX(), Vec3 v = Vec3::UnitY()) {
  EllipseParams e;
  e.semi_a = a;
  e.semi_b = b;
  e.center = center;
  e.u = u;
  e.v = v;
  return spec_of("ellipse", e, 0.0, 2.0 * kPi);
}

/// Ellipse a=2, b=1 in a plane tilted about two axes and shifted.
inline CurveSpec tilted_ellipse() {
  CurveSpec spec = ellipse(2.0, 1.0);
  spec.motion.rotation = (Eigen::AngleAxisd(0.7, Vec3::UnitX()) *
                          Eigen::AngleAxisd(-0.4, Vec3::UnitY()))
                             .toRotationMatrix();
  spec.motion.translation = Vec3(0.5, -1.0, 2.0);
  return spec;
}

/// The plane cubic (t, t^3, 0) on [-1, 1]; inflection at t = 0.
inline CurveSpec plane_inflection() {
  PolynomialParams p;
  p.coefficients = {Vec3::Zero(), Vec3::UnitX(), Vec3::Zero(), Vec3::UnitY()};
  return spec_of("plane-cubic", p, -1.0, 1.0);
}

inline double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

}  // namespace curveframe::testing
