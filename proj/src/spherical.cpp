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

#include "curveframe/spherical.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "curveframe/error.hpp"
#include "curveframe/stencil.hpp"

namespace curveframe {

SphereFit fit_sphere(std::span<const Vec3> samples, const Tolerances& tol) {
  const int m = static_cast<int>(samples.size());
  if (m < 4) throw CurveError(ErrorKind::insufficient_data, "sphere fit needs >= 4 samples");

  Vec3 centroid = Vec3::Zero();
  for (const Vec3& x : samples) centroid += x;
  centroid /= m;
  double scale = 0.0;
  for (const Vec3& x : samples) scale += (x - centroid).squaredNorm();
  scale = std::sqrt(scale / m);
  if (!(scale > 0.0)) throw CurveError(ErrorKind::degenerate_fit, "all samples coincide");

  Eigen::MatrixXd design(m, 4);
  Eigen::VectorXd rhs(m);
  for (int i = 0; i < m; ++i) {
    const Vec3 y = (samples[i] - centroid) / scale;
    design.row(i) << 2.0 * y.x(), 2.0 * y.y(), 2.0 * y.z(), 1.0;
    rhs(i) = y.squaredNorm();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double condition = sv(0) / sv(sv.size() - 1);
  if (!(condition <= tol.fit_condition)) {
    throw CurveError(ErrorKind::degenerate_fit,
                     "sphere fit design matrix condition number " + std::to_string(condition) +
                         " (samples are coplanar; the curve is likely planar)");
  }
  const Eigen::Vector4d sol = svd.solve(rhs);
  const Vec3 q = sol.head<3>();
  const double r2 = sol(3) + q.squaredNorm();
  if (!(r2 > 0.0)) throw CurveError(ErrorKind::degenerate_fit, "sphere fit gave no real radius");

  SphereFit fit;
  fit.center = centroid + scale * q;
  fit.radius = scale * std::sqrt(r2);
  double acc = 0.0;
  for (const Vec3& x : samples) {
    const double e = (x - fit.center).norm() - fit.radius;
    acc += e * e;
  }
  fit.rms_residual = std::sqrt(acc / m);
  return fit;
}

double spherical_curvature(const Jet& jet, const Vec3& p) {
  const double v = jet.speed();
  return (jet.d[0] - p).dot(jet.d[1].cross(jet.d[2])) / (v * v * v);
}

double spherical_curvature_rate(const Jet& unit_jet, const Vec3& p) {
  return (unit_jet.d[0] - p).dot(unit_jet.d[1].cross(unit_jet.d[3]));
}

std::pair<double, double> kappa_tau_from_J(double J, double J_prime, double r) {
  const double q = 1.0 + J * J;
  return {std::sqrt(q) / r, J_prime / q};
}

double rm_angle_from_J(double J) { return std::atan(J); }

namespace {

void require_on_sphere(const Vec3& x, const Vec3& p, double r, double tol, double s = NAN) {
  const double off = std::abs((x - p).norm() - r);
  if (!(off <= tol * r)) {
    throw CurveError(ErrorKind::sphericality,
                     "point is " + std::to_string(off) + " off the sphere of radius " +
                         std::to_string(r),
                     std::isnan(s) ? std::nullopt : std::optional<double>(s));
  }
}

}  // namespace

Frame saban_frame(const Jet& jet, const Vec3& p, double r, const Tolerances& tol) {
  require_on_sphere(jet.d[0], p, r, tol.on_sphere);
  Frame f;
  f.e1 = (jet.d[0] - p) / r;
  f.e2 = jet.d[1].normalized();
  f.e3 = f.e1.cross(f.e2);
  return f;
}

SphericalCurvatureSeries spherical_curvature_series(const ArcLengthCurve& curve, const Vec3& p,
                                                    int n) {
  const ArcLengthSamples samples = resample_by_arclength(curve, n, 2, Spacing::endpoints);
  SphericalCurvatureSeries out;
  out.ss = samples.s;
  out.J.reserve(samples.size());
  for (const Jet& jet : samples.jets) out.J.push_back(spherical_curvature(jet, p));
  out.J_prime = differentiate(std::span<const double>(out.J), samples.spacing(), 1);
  return out;
}

FrameField spherical_rmf(const ArcLengthCurve& curve, const SphereFit& fit, int n,
                         const Tolerances& tol) {
  const ArcLengthSamples samples = resample_by_arclength(curve, n, 2, Spacing::endpoints);
  double worst = 0.0;
  double worst_s = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double off = std::abs((samples.jets[k].d[0] - fit.center).norm() - fit.radius);
    if (off > worst) {
      worst = off;
      worst_s = samples.s[k];
    }
  }
  if (!(worst <= tol.on_sphere * fit.radius)) {
    throw CurveError(ErrorKind::sphericality,
                     "worst sample is " + std::to_string(worst) + " off the fitted sphere",
                     worst_s);
  }

  FrameField field;
  field.kind = FrameKind::rm;
  field.ss = samples.s;
  for (const Jet& jet : samples.jets) {
    const double v = jet.speed();
    const Vec3 t = jet.d[1] / v;
    const Vec3 accel = (jet.d[2] - jet.d[2].dot(t) * t) / (v * v);  // d^2 alpha / ds^2
    const Vec3 radial = jet.d[0] - fit.center;
    Frame f;
    f.e1 = t;
    f.e2 = (radial - radial.dot(t) * t).normalized();
    f.e3 = t.cross(f.e2);
    field.points.push_back(jet.d[0]);
    field.frames.push_back(f);
    field.k1.push_back(accel.dot(f.e2));
    field.k2.push_back(accel.dot(f.e3));
  }
  return field;
}

SphericalityVerdict sphericality_test(const NormalDevelopment& dev, const Tolerances& tol) {
  const std::size_t m = dev.points.size();
  if (m < 3) {
    throw CurveError(ErrorKind::insufficient_data, "sphericality test needs >= 3 points");
  }
  SphericalityVerdict v;
  Vec2 centroid = Vec2::Zero();
  for (const Vec2& q : dev.points) {
    centroid += q;
    v.max_norm = std::max(v.max_norm, q.norm());
  }
  centroid /= static_cast<double>(m);
  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
  for (const Vec2& q : dev.points) cov += (q - centroid) * (q - centroid).transpose();
  cov /= static_cast<double>(m);
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(cov);
  const double spread = std::sqrt(std::max(0.0, eig.eigenvalues()(1)));

  v.centroid = centroid;
  const double line_tol = tol.line_residual * v.max_norm;
  if (spread <= line_tol) {
    v.degenerate = true;
    v.line_residual = spread;
    v.distance = centroid.norm();
    if (v.distance > 0.0) {
      v.normal = centroid / v.distance;
      v.direction = Vec2(-v.normal.y(), v.normal.x());
    }
  } else {
    v.direction = eig.eigenvectors().col(1);
    v.normal = eig.eigenvectors().col(0);
    v.line_residual = std::sqrt(std::max(0.0, eig.eigenvalues()(0)));
    double signed_distance = v.normal.dot(centroid);
    if (signed_distance < 0.0) {
      v.normal = -v.normal;
      signed_distance = -signed_distance;
    }
    v.distance = signed_distance;
  }
  v.spherical = v.line_residual < line_tol && v.distance > tol.line_origin;
  v.radius = v.spherical ? 1.0 / v.distance : 0.0;
  return v;
}

SphereFit sphere_from_development(const FrameField& field, const SphericalityVerdict& verdict) {
  if (!(verdict.distance > 0.0)) {
    throw CurveError(ErrorKind::degenerate_fit, "development line passes through the origin");
  }
  const Vec2 beta = verdict.normal / verdict.distance;
  SphereFit fit;
  fit.radius = 1.0 / verdict.distance;
  Vec3 acc = Vec3::Zero();
  for (std::size_t k = 0; k < field.size(); ++k) {
    acc += field.points[k] + beta.x() * field.frames[k].e2 + beta.y() * field.frames[k].e3;
  }
  fit.center = acc / static_cast<double>(field.size());
  double sq = 0.0;
  for (const Vec3& x : field.points) {
    const double e = (x - fit.center).norm() - fit.radius;
    sq += e * e;
  }
  fit.rms_residual = std::sqrt(sq / static_cast<double>(field.size()));
  return fit;
}

}  // namespace curveframe
