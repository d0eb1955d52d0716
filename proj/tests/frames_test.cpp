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
#include "curveframe/frames.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

namespace curveframe {
namespace {

using testing::kPi;

double end_angle(const FrameField& a, const FrameField& b) {
  return std::abs(signed_angle(a.frames.back().e2, b.frames.back().e2, a.frames.back().e1));
}

TEST(Frenet, CircleAtZero) {
  const Curve c(testing::circle(2.0));
  const FrenetApparatus fa = frenet_apparatus(c.jet(0.0, 3));
  EXPECT_NEAR(fa.kappa, 0.5, 1e-15);
  EXPECT_NEAR(*fa.tau, 0.0, 1e-15);
  EXPECT_NEAR((fa.frame->e2 - Vec3(-1, 0, 0)).norm(), 0.0, 1e-15);
  EXPECT_TRUE(is_orthonormal(*fa.frame));
}

TEST(Frenet, HelixEverySample) {
  const ArcLengthCurve c(make_helix(1.0, 1.0));
  const FrameField f = frenet_field(c, 33);
  EXPECT_EQ(f.kind, FrameKind::frenet);
  for (std::size_t k = 0; k < f.size(); ++k) {
    EXPECT_NEAR(f.k1[k], 0.5, 1e-14);
    EXPECT_NEAR(f.k2[k], 0.5, 1e-14);
  }
}

TEST(Frenet, MatchesOracleOnTwistedCubic) {
  const Curve c(testing::twisted_cubic());
  const FrenetApparatus fa = frenet_apparatus(c.jet(0.5, 3));
  EXPECT_NEAR(fa.kappa, oracle::cubic::kappa, 1e-14);
  EXPECT_NEAR(*fa.tau, oracle::cubic::tau, 1e-14);
}

TEST(Frenet, StraightLineIsInflectionEverywhere) {
  const Curve c(testing::segment(Vec3::Zero(), Vec3(1, 2, 3)));
  for (double t : {0.0, 0.5, 1.0}) EXPECT_TRUE(frenet_apparatus(c.jet(t, 3)).is_inflection());
  const ArcLengthCurve a(testing::segment(Vec3::Zero(), Vec3(1, 2, 3)));
  try {
    frenet_field(a, 8);
    FAIL() << "expected an inflection error";
  } catch (const CurveError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::inflection);
  }
}

TEST(Quadrature, PlaneCurveKeepsPrincipalNormal) {
  const ArcLengthCurve c(testing::tilted_ellipse());
  const FrameField q = rmf_by_quadrature(c, 257);
  const FrameField f = frenet_field(c, 257);
  for (std::size_t k = 0; k < q.size(); ++k) {
    EXPECT_NEAR((q.frames[k].e2 - f.frames[k].e2).norm(), 0.0, 1e-12);
    EXPECT_NEAR(q.k2[k], 0.0, 1e-12);
  }
}

TEST(Quadrature, HelixAngleTravel) {
  const ArcLengthCurve c(make_helix(1.0, 1.0));
  const FrameField q = rmf_by_quadrature(c, 4097);
  EXPECT_NEAR(q.theta.back() - q.theta.front(), kPi * std::sqrt(2.0), 1e-6);
}

TEST(Quadrature, AngleTravelIsTotalTorsion) {
  const ArcLengthCurve cubic(testing::twisted_cubic());
  const FrameField q = rmf_by_quadrature(cubic, 4097);
  EXPECT_NEAR(q.theta.back() - q.theta.front(), oracle::cubic::total_torsion, 1e-10);
  // Closed spherical curve over one period against a trapezoid sum of Frenet torsion.
  const ArcLengthCurve sphere(testing::wobbly_sphere());
  const FrameField s = rmf_by_quadrature(sphere, 4097);
  const FrameField f = frenet_field(sphere, 20001);
  double total = 0.0;
  for (std::size_t k = 1; k < f.size(); ++k) total += 0.5 * f.spacing() * (f.k2[k - 1] + f.k2[k]);
  EXPECT_NEAR(s.theta.back() - s.theta.front(), total, 1e-6);
}

TEST(Quadrature, RefusesInflections) {
  const ArcLengthCurve c(testing::plane_inflection());
  try {
    rmf_by_quadrature(c, 101);
    FAIL() << "expected an inflection error";
  } catch (const CurveError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::inflection);
  }
}

TEST(Quadrature, CurvaturesReconstructKappa) {
  const ArcLengthCurve c(testing::twisted_cubic());
  const FrameField q = rmf_by_quadrature(c, 1025);
  const FrameField f = frenet_field(c, 1025);
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double kappa = f.k1[k];
    EXPECT_NEAR(std::hypot(q.k1[k], q.k2[k]), kappa, 1e-8 * kappa);
  }
}

// n1 = cos(theta) n - sin(theta) b, so raising theta0 turns n1 negatively about t.
TEST(Quadrature, GaugeShiftIsConstantRotation) {
  const ArcLengthCurve c(testing::wobbly_sphere());
  const double shift = 0.83;
  const FrameField a = rmf_by_quadrature(c, 513, 0.0);
  const FrameField b = rmf_by_quadrature(c, 513, shift);
  for (std::size_t k : {0u, 37u, 101u, 200u, 255u, 311u, 420u, 512u}) {
    EXPECT_NEAR(signed_angle(a.frames[k].e2, b.frames[k].e2, a.frames[k].e1), -shift, 1e-8);
  }
  const FrameField r = rotate_gauge(a, -shift);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_NEAR((r.frames[k].e2 - b.frames[k].e2).norm(), 0.0, 1e-12);
  }
}

TEST(DoubleReflection, PlaneCurveBinormalIsConstant) {
  const CurveSpec spec = testing::tilted_ellipse();
  const ArcLengthCurve c(spec);
  const FrameField d = rmf_by_double_reflection(c, 4097);
  const Vec3 normal = spec.motion.rotation.col(2);
  for (const Frame& f : d.frames) EXPECT_NEAR(std::abs(f.e3.dot(normal)), 1.0, 1e-8);
}

TEST(DoubleReflection, AgreesWithQuadratureOnHelix) {
  const ArcLengthCurve c(make_helix(1.0, 1.0));
  EXPECT_LT(end_angle(rmf_by_double_reflection(c, 4097), rmf_by_quadrature(c, 4097)), 1e-6);
}

TEST(DoubleReflection, CrossesInflectionWithUnitFrames) {
  const ArcLengthCurve c(testing::plane_inflection());
  const FrameField d = rmf_by_double_reflection(c, 1025);
  for (const Frame& f : d.frames) EXPECT_TRUE(is_orthonormal(f));
  EXPECT_LT(rm_defect(d), 1e-8);
}

TEST(DoubleReflection, FromSamplesWithGivenInitialFrame) {
  const ArcLengthCurve c(make_helix(1.0, 1.0));
  const ArcLengthSamples s = resample_by_arclength(c, 513, 2);
  Frame initial = default_initial_frame(s.jets.front());
  const FrameField d = rmf_by_double_reflection(s, initial);
  EXPECT_NEAR((d.frames.front().e2 - initial.e2).norm(), 0.0, 1e-15);
  EXPECT_EQ(d.size(), 513u);
}

TEST(Development, CircleIsOnePoint) {
  const ArcLengthCurve c(testing::circle(2.0));
  const NormalDevelopment dev = normal_development(rmf_by_quadrature(c, 257));
  for (const Vec2& p : dev.points) EXPECT_NEAR((p - Vec2(0.5, 0.0)).norm(), 0.0, 1e-10);
}

TEST(Development, HelixIsCircleAboutOrigin) {
  const ArcLengthCurve c(make_helix(1.0, 1.0));
  const NormalDevelopment dev = normal_development(rmf_by_quadrature(c, 1025));
  for (const Vec2& p : dev.points) EXPECT_NEAR(p.norm(), 0.5, 1e-8);
}

TEST(Defect, FrenetRelabeledAsRmShowsTorsion) {
  const ArcLengthCurve c(make_helix(1.0, 1.0));
  FrameField f = frenet_field(c, 1025);
  f.kind = FrameKind::rm;
  EXPECT_NEAR(rm_defect(f), 0.5, 1e-4);
}

TEST(Defect, PlaneCurveField) {
  const ArcLengthCurve c(testing::ellipse(2.0, 1.0));
  EXPECT_LT(rm_defect(rmf_by_double_reflection(c, 4097)), 1e-8);
}

TEST(Defect, ShrinksWithGridRefinement) {
  const ArcLengthCurve c(testing::twisted_cubic(-1.0, 1.0));
  const double coarse = rm_defect(rmf_by_double_reflection(c, 257));
  const double fine = rm_defect(rmf_by_double_reflection(c, 513));
  EXPECT_LE(fine, coarse / 2.0);
  const double qc = rm_defect(rmf_by_quadrature(c, 257));
  const double qf = rm_defect(rmf_by_quadrature(c, 513));
  EXPECT_LE(qf, qc / 2.0);
}

TEST(InitialFrame, FallsBackToAxesAtInflection) {
  const Curve c(testing::segment(Vec3::Zero(), Vec3::UnitX()));
  const Frame f = default_initial_frame(c.jet(0.0, 2));
  EXPECT_TRUE(is_orthonormal(f));
  EXPECT_NEAR((f.e2 - Vec3::UnitY()).norm(), 0.0, 1e-15);
}

}  // namespace
}  // namespace curveframe
