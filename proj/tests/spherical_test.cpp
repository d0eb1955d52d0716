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
#include "curveframe/spherical.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

namespace curveframe {
namespace {

using testing::kPi;

std::vector<Vec3> sample_points(const CurveSpec& spec, int n) {
  const Curve c(spec);
  std::vector<Vec3> out;
  for (int k = 0; k < n; ++k) out.push_back(c.position(c.t0() + (c.t1() - c.t0()) * k / n));
  return out;
}

TEST(FitSphere, ExactUnitSphere) {
  CurveSpec spec = testing::wobbly_sphere(Vec3::Zero(), 1.0);
  const SphereFit fit = fit_sphere(sample_points(spec, 200));
  EXPECT_NEAR(fit.center.norm(), 0.0, 1e-8);
  EXPECT_NEAR(fit.radius, 1.0, 1e-8);
  EXPECT_LT(fit.rms_residual, 1e-10);
}

TEST(FitSphere, TranslatedSphere) {
  const SphereFit fit = fit_sphere(sample_points(testing::wobbly_sphere(Vec3(1, 2, -1), 3.0), 200));
  EXPECT_NEAR((fit.center - Vec3(1, 2, -1)).norm(), 0.0, 1e-8);
  EXPECT_NEAR(fit.radius, 3.0, 1e-8);
}

TEST(FitSphere, PlanarCircleIsDegenerate) {
  try {
    fit_sphere(sample_points(testing::circle(1.0), 100));
    FAIL() << "expected a degenerate-fit error";
  } catch (const CurveError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degenerate_fit);
  }
}

TEST(SphericalCurvature, GreatAndSmallCircles) {
  const Curve great(testing::small_circle(kPi / 2));
  const Curve small(testing::small_circle(kPi / 4));
  const Curve doubled(testing::small_circle(kPi / 4, 1.0, Vec3::Zero(), 2.0));
  for (double t : {0.0, 0.4, 1.9, 3.0}) {
    EXPECT_NEAR(spherical_curvature(great.jet(t, 2), Vec3::Zero()), 0.0, 1e-15);
    EXPECT_NEAR(spherical_curvature(small.jet(t, 2), Vec3::Zero()), 1.0, 1e-14);
    EXPECT_NEAR(spherical_curvature(doubled.jet(t / 2, 2), Vec3::Zero()), 1.0, 1e-14);
  }
}

TEST(SphericalCurvature, ParametrizationInvariant) {
  CurveSpec slow = testing::wobbly_sphere();
  CurveSpec fast = slow;
  auto& p = std::get<SphericalFourierParams>(fast.params);
  p.polar.omega = 3.0;
  p.azimuth.linear = 3.0;
  fast.t1 = slow.t1 / 3.0;
  const Curve a(slow), b(fast);
  const Vec3 center(0.3, -0.2, 0.1);
  for (double t : {0.1, 1.0, 2.5, 4.0}) {
    EXPECT_NEAR(spherical_curvature(a.jet(t, 2), center), spherical_curvature(b.jet(t / 3, 2), center),
                1e-12);
  }
}

TEST(SphericalCurvature, MatchesOracle) {
  const ArcLengthCurve c(testing::wobbly_sphere());
  const Vec3 p(0.3, -0.2, 0.1);
  const Jet u = c.unit_jet_at(oracle::sphere::s_one, 3);
  EXPECT_NEAR(spherical_curvature(u, p), oracle::sphere::J, 1e-12);
  EXPECT_NEAR(spherical_curvature_rate(u, p), oracle::sphere::J_prime, 1e-12);
  EXPECT_NEAR(spherical_curvature(c.unit_jet_at(0.0, 2), p), oracle::sphere::J_start, 1e-12);
  const auto [kappa, tau] = kappa_tau_from_J(oracle::sphere::J, oracle::sphere::J_prime, 2.0);
  EXPECT_NEAR(kappa, oracle::sphere::kappa, 1e-14);
  EXPECT_NEAR(tau, oracle::sphere::tau, 1e-14);
}

TEST(SphericalCurvature, SeriesDerivativeMatchesThirdDerivativeForm) {
  const ArcLengthCurve c(testing::wobbly_sphere());
  const Vec3 p(0.3, -0.2, 0.1);
  const SphericalCurvatureSeries s = spherical_curvature_series(c, p, 4097);
  for (std::size_t k = 0; k < s.ss.size(); k += 97) {
    EXPECT_NEAR(s.J_prime[k], spherical_curvature_rate(c.unit_jet_at(s.ss[k], 3), p), 1e-8);
  }
}

TEST(KappaTauFromJ, ClosedForms) {
  auto [k0, t0] = kappa_tau_from_J(0.0, 0.0, 1.0);
  EXPECT_DOUBLE_EQ(k0, 1.0);
  EXPECT_DOUBLE_EQ(t0, 0.0);
  auto [k1, t1] = kappa_tau_from_J(1.0, 0.0, 1.0);
  EXPECT_NEAR(k1, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(k1, 1.0 / std::sin(kPi / 4), 1e-15);
  EXPECT_DOUBLE_EQ(t1, 0.0);
}

TEST(RmAngle, FromJ) {
  EXPECT_DOUBLE_EQ(rm_angle_from_J(0.0), 0.0);
  EXPECT_NEAR(rm_angle_from_J(1.0), kPi / 4, 1e-15);
  // Delta arctan J equals the integral of the torsion between the oracle points.
  EXPECT_NEAR(rm_angle_from_J(oracle::sphere::J) - rm_angle_from_J(oracle::sphere::J_start),
              oracle::sphere::torsion_to_one, 1e-14);
}

TEST(RmAngle, MatchesQuadratureTravel) {
  const ArcLengthCurve c(testing::wobbly_sphere());
  const FrameField q = rmf_by_quadrature(c, 4097);
  const std::size_t k = static_cast<std::size_t>(
      std::lround(oracle::sphere::s_one / q.spacing()));
  const double J = spherical_curvature(c.unit_jet_at(q.ss[k], 2), Vec3(0.3, -0.2, 0.1));
  EXPECT_NEAR(q.theta[k] - q.theta[0],
              rm_angle_from_J(J) - rm_angle_from_J(oracle::sphere::J_start), 1e-6);
}

TEST(SabanFrame, Equator) {
  const Curve c(testing::small_circle(kPi / 2));
  const Frame f = saban_frame(c.jet(0.0, 2), Vec3::Zero(), 1.0);
  EXPECT_NEAR((f.e1 - Vec3::UnitX()).norm(), 0.0, 1e-15);
  EXPECT_NEAR((f.e2 - Vec3::UnitY()).norm(), 0.0, 1e-15);
  EXPECT_NEAR((f.e3 - Vec3::UnitZ()).norm(), 0.0, 1e-15);
  const Curve w(testing::wobbly_sphere());
  EXPECT_TRUE(is_orthonormal(saban_frame(w.jet(2.2, 2), Vec3(0.3, -0.2, 0.1), 2.0)));
  EXPECT_THROW(saban_frame(w.jet(2.2, 2), Vec3::Zero(), 2.0), CurveError);
}

TEST(SphericalRmf, FirstCurvatureIsMinusInverseRadius) {
  const ArcLengthCurve c(testing::wobbly_sphere());
  const SphereFit fit{Vec3(0.3, -0.2, 0.1), 2.0, 0.0};
  const FrameField f = spherical_rmf(c, fit, 4097);
  for (double k1 : f.k1) EXPECT_NEAR(k1, -0.5, 1e-10);
  EXPECT_LT(rm_defect(f), 1e-6);
}

TEST(SphericalRmf, SmallCircleSecondCurvature) {
  const ArcLengthCurve c(testing::small_circle(kPi / 4));
  const FrameField f = spherical_rmf(c, SphereFit{}, 257);
  for (std::size_t k = 0; k < f.size(); ++k) {
    EXPECT_NEAR(f.k1[k], -1.0, 1e-12);
    EXPECT_NEAR(f.k2[k], -1.0, 1e-12);
  }
}

TEST(SphericalRmf, RejectsOffSphereCurves) {
  const ArcLengthCurve c(make_helix(1.0, 1.0));
  EXPECT_THROW(spherical_rmf(c, SphereFit{Vec3::Zero(), 1.0, 0.0}, 65), CurveError);
}

TEST(Sphericality, RecoversRadiusTwo) {
  const ArcLengthCurve c(testing::wobbly_sphere());
  const FrameField q = rmf_by_quadrature(c, 4097);
  const SphericalityVerdict v = sphericality_test(normal_development(q));
  ASSERT_TRUE(v.spherical);
  EXPECT_NEAR(v.radius, 2.0, 1e-4 * 2.0);
  const SphereFit fit = sphere_from_development(q, v);
  EXPECT_NEAR((fit.center - Vec3(0.3, -0.2, 0.1)).norm(), 0.0, 1e-6);
}

TEST(Sphericality, HelixIsNotSpherical) {
  const ArcLengthCurve c(make_helix(1.0, 1.0));
  const SphericalityVerdict v = sphericality_test(normal_development(rmf_by_quadrature(c, 1025)));
  EXPECT_FALSE(v.spherical);
  EXPECT_GT(v.line_residual, 0.1);
}

TEST(Sphericality, EllipseDevelopmentPassesThroughOrigin) {
  const ArcLengthCurve c(testing::ellipse(2.0, 1.0));
  const SphericalityVerdict v = sphericality_test(normal_development(rmf_by_quadrature(c, 1025)));
  EXPECT_FALSE(v.spherical);
  EXPECT_LT(v.distance, 1e-9);
}

TEST(Sphericality, CircleIsDegenerateMinimalSphere) {
  const ArcLengthCurve c(testing::circle(2.0));
  const SphericalityVerdict v = sphericality_test(normal_development(rmf_by_quadrature(c, 513)));
  EXPECT_TRUE(v.spherical);
  EXPECT_TRUE(v.degenerate);
  EXPECT_NEAR(v.radius, 2.0, 1e-10);
}

TEST(Sphericality, TranslationEquivariance) {
  const Vec3 shift(5, -3, 2);
  const ArcLengthCurve a(testing::wobbly_sphere());
  const ArcLengthCurve b(testing::wobbly_sphere(Vec3(0.3, -0.2, 0.1) + shift));
  const FrameField fa = rmf_by_quadrature(a, 257), fb = rmf_by_quadrature(b, 257);
  for (std::size_t k = 0; k < fa.size(); k += 16) {
    EXPECT_NEAR(fa.k1[k], fb.k1[k], 1e-12);
    EXPECT_NEAR(fa.k2[k], fb.k2[k], 1e-12);
    const double s = fa.ss[k];
    EXPECT_NEAR(spherical_curvature(a.unit_jet_at(s, 2), Vec3(0.3, -0.2, 0.1)),
                spherical_curvature(b.unit_jet_at(s, 2), Vec3(0.3, -0.2, 0.1) + shift), 1e-12);
  }
}

TEST(Sphericality, NoInflectionOnSphere) {
  for (const CurveSpec& spec : spherical_suite(3, 5)) {
    const ArcLengthCurve c(spec);
    const double r = std::get<SphericalFourierParams>(spec.params).radius;
    const FrameField f = frenet_field(c, 513);
    for (double kappa : f.k1) EXPECT_GE(kappa * r, 1.0 - 1e-10);
  }
}

}  // namespace
}  // namespace curveframe
