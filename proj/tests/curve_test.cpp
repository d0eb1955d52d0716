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

#include "curveframe/error.hpp"
#include "curveframe/stencil.hpp"
#include "support.hpp"

namespace curveframe {
namespace {

using testing::kPi;

TEST(Curve, HelixJetAtZero) {
  const Curve c(make_helix(1.0, 1.0));
  const Jet j = c.jet(0.0, 3);
  EXPECT_NEAR((j.d[0] - Vec3(1, 0, 0)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((j.d[1] - Vec3(0, 1, 1)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((j.d[2] - Vec3(-1, 0, 0)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((j.d[3] - Vec3(0, -1, 0)).norm(), 0.0, 1e-15);
}

TEST(Curve, CircleJetAtQuarterTurn) {
  const Curve c(testing::circle(2.0));
  const Jet j = c.jet(kPi / 2, 1);
  EXPECT_NEAR((j.d[0] - Vec3(0, 2, 0)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((j.d[1] - Vec3(-2, 0, 0)).norm(), 0.0, 1e-15);
}

TEST(Curve, SmallCircleStaysOnUnitSphere) {
  const Curve c(testing::small_circle(kPi / 4));
  for (double t = 0.0; t <= 2 * kPi; t += 0.37) {
    EXPECT_NEAR(c.position(t).norm(), 1.0, 1e-15);
  }
}

TEST(Curve, RigidMotionAppliesToEveryDerivative) {
  CurveSpec spec = testing::twisted_cubic();
  const Curve plain(spec);
  spec.motion.rotation = Eigen::AngleAxisd(0.9, Vec3(1, 2, 3).normalized()).toRotationMatrix();
  spec.motion.translation = Vec3(1, -2, 0.5);
  const Curve moved(spec);
  const Jet a = plain.jet(0.3, 4), b = moved.jet(0.3, 4);
  EXPECT_NEAR((b.d[0] - (spec.motion.rotation * a.d[0] + spec.motion.translation)).norm(), 0,
              1e-15);
  for (int k = 1; k <= 4; ++k) {
    EXPECT_NEAR((b.d[k] - spec.motion.rotation * a.d[k]).norm(), 0, 1e-14) << k;
  }
}

TEST(Curve, DomainAndRegularityErrors) {
  const Curve c(testing::twisted_cubic());
  try {
    c.jet(1.5, 1);
    FAIL() << "expected a domain error";
  } catch (const CurveError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain);
  }
  PolynomialParams cusp;
  cusp.coefficients = {Vec3::Zero(), Vec3::Zero(), Vec3::UnitX(), Vec3::UnitY()};
  const Curve semicubical(testing::spec_of("cusp", cusp, -1.0, 1.0));
  try {
    semicubical.jet(0.0, 1);
    FAIL() << "expected a regularity error";
  } catch (const CurveError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::regularity);
  }
}

// Finite differences of d0 converge to the closed-form d1, d2, d3 at fourth order.
TEST(Curve, ClosedFormDerivativesPassRichardsonCheck) {
  const Curve c(testing::wobbly_sphere());
  const double t = 1.3;
  const Jet exact = c.jet(t, 3);
  const auto position = [&](double x) { return c.position(x); };
  for (int order = 1; order <= 3; ++order) {
    double errors[3];
    const double steps[3] = {0.04, 0.02, 0.01};
    for (int i = 0; i < 3; ++i) {
      errors[i] = (central_derivative(position, t, steps[i], order) - exact.d[order]).norm();
    }
    EXPECT_GT(std::log2(errors[0] / errors[1]), 3.5) << order;
    EXPECT_GT(std::log2(errors[1] / errors[2]), 3.5) << order;
  }
}

TEST(Curve, FourthDerivativeOfSphericalCurve) {
  const Curve c(testing::wobbly_sphere());
  const Jet exact = c.jet(0.8, 4);
  const auto third = [&](double x) { return c.jet(x, 3).d[3]; };
  EXPECT_NEAR((central_derivative(third, 0.8, 1e-3, 1) - exact.d[4]).norm(), 0.0, 1e-8);
}

TEST(Curve, UnitSpeedJetOfHelix) {
  const Curve c(make_helix(1.0, 1.0));
  const Jet u = unit_speed_jet(c.jet(0.0, 3));
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(u.d[1].norm(), 1.0, 1e-15);
  EXPECT_NEAR((u.d[1] - Vec3(0, r, r)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((u.d[2] - Vec3(-0.5, 0, 0)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((u.d[3] - Vec3(0, -0.5 * r, 0)).norm(), 0.0, 1e-15);
}

TEST(Curve, BezierEndpointsAndTangents) {
  BezierParams b;
  b.control_points = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(1, 1, 0), Vec3(1, 1, 1)};
  const Curve c(testing::spec_of("bezier", b, 0.0, 2.0));
  EXPECT_NEAR(c.position(0.0).norm(), 0.0, 1e-15);
  EXPECT_NEAR((c.position(2.0) - Vec3(1, 1, 1)).norm(), 0.0, 1e-15);
  // B'(0) = 3 (P1 - P0) per unit u, and u = t / 2.
  EXPECT_NEAR((c.jet(0.0, 1).d[1] - Vec3(1.5, 0, 0)).norm(), 0.0, 1e-15);
}

TEST(Curve, FourierCurveMatchesSeries) {
  FourierCurveParams f;
  f.series.constant = Vec3(1, 0, 0);
  f.series.linear = Vec3(0, 0, 0.5);
  f.series.omega = 2.0;
  f.series.cos = {Vec3(1, 0, 0)};
  f.series.sin = {Vec3(0, 1, 0)};
  const Curve c(testing::spec_of("fourier", f, 0.0, 1.0));
  const double t = 0.3;
  const Jet j = c.jet(t, 2);
  EXPECT_NEAR((j.d[0] - Vec3(1 + std::cos(2 * t), std::sin(2 * t), 0.5 * t)).norm(), 0, 1e-15);
  EXPECT_NEAR((j.d[2] - Vec3(-4 * std::cos(2 * t), -4 * std::sin(2 * t), 0)).norm(), 0, 1e-14);
}

TEST(Curve, FamilyNames) {
  EXPECT_EQ(to_string(make_helix(1, 1).family()), "helix");
  EXPECT_EQ(to_string(testing::wobbly_sphere().family()), "spherical_fourier");
  EXPECT_EQ(to_string(testing::ellipse(2, 1).family()), "ellipse");
}

}  // namespace
}  // namespace curveframe
