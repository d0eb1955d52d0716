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

#include "curveframe/planar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "curveframe/error.hpp"
#include "curveframe/stencil.hpp"

namespace curveframe {

PlaneFit fit_plane(std::span<const Vec3> samples) {
  const std::size_t m = samples.size();
  if (m < 3) throw CurveError(ErrorKind::insufficient_data, "plane fit needs >= 3 samples");
  Vec3 centroid = Vec3::Zero();
  for (const Vec3& x : samples) centroid += x;
  centroid /= static_cast<double>(m);
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const Vec3& x : samples) cov += (x - centroid) * (x - centroid).transpose();
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(cov);
  const Vec3 ev = eig.eigenvalues();
  if (!(ev(1) > 1e-14 * ev(2))) {
    throw CurveError(ErrorKind::degenerate_fit, "samples are collinear");
  }
  PlaneFit fit;
  fit.point = centroid;
  fit.normal = eig.eigenvectors().col(0).normalized();
  double acc = 0.0;
  for (const Vec3& x : samples) {
    const double d = (x - centroid).dot(fit.normal);
    acc += d * d;
  }
  fit.rms_residual = std::sqrt(acc / static_cast<double>(m));
  return fit;
}

double RMPlaneDecomposition::max_residual() const {
  double worst = 0.0;
  for (std::size_t k = 0; k < ss.size(); ++k) {
    worst = std::max({worst, std::abs(residual_tangent[k]), std::abs(residual_normal[k]),
                      std::abs(residual_binormal[k])});
  }
  return worst;
}

RMPlaneDecomposition rm_plane_decomposition(const FrameField& field, const Vec3& p) {
  if (field.kind != FrameKind::rm) {
    throw CurveError(ErrorKind::input, "RM plane decomposition needs an RM frame field");
  }
  const std::size_t n = field.size();
  if (field.points.size() != n || field.frames.size() != n || field.k1.size() != n ||
      field.k2.size() != n) {
    throw CurveError(ErrorKind::input, "frame field series are not on one grid");
  }
  RMPlaneDecomposition d;
  d.ss = field.ss;
  d.A.resize(n);
  d.B.resize(n);
  d.out_of_plane.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vec3 r = field.points[k] - p;
    d.A[k] = r.dot(field.frames[k].e1);
    d.B[k] = r.dot(field.frames[k].e2);
    d.out_of_plane[k] = r.dot(field.frames[k].e3);
  }
  const auto dA = differentiate(std::span<const double>(d.A), field.spacing(), 1, kHighAccuracy);
  const auto dB = differentiate(std::span<const double>(d.B), field.spacing(), 1, kHighAccuracy);
  d.residual_tangent.resize(n);
  d.residual_normal.resize(n);
  d.residual_binormal.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    d.residual_tangent[k] = dA[k] - field.k1[k] * d.B[k] - 1.0;
    d.residual_normal[k] = dB[k] + field.k1[k] * d.A[k];
    d.residual_binormal[k] = field.k2[k] * d.A[k];
  }
  return d;
}

std::string to_string(PlanarityVerdict verdict) {
  switch (verdict) {
    case PlanarityVerdict::planar: return "planar";
    case PlanarityVerdict::not_planar: return "not_planar";
    case PlanarityVerdict::indeterminate: return "indeterminate";
  }
  return "unknown";
}

namespace {

struct GridMinimum {
  double value = std::numeric_limits<double>::infinity();
  Vec3 point = Vec3::Zero();
};

// max_s |k2(s) A(s, p)| with A = <alpha, t> - <p, t>.
double binormal_violation(const std::vector<double>& k2, const std::vector<double>& alpha_t,
                          const std::vector<Vec3>& tangents, const Vec3& p) {
  double worst = 0.0;
  for (std::size_t k = 0; k < k2.size(); ++k) {
    worst = std::max(worst, std::abs(k2[k] * (alpha_t[k] - p.dot(tangents[k]))));
  }
  return worst;
}

GridMinimum search_grid(const std::vector<double>& k2, const std::vector<double>& alpha_t,
                        const std::vector<Vec3>& tangents, const Vec3& lo, const Vec3& step,
                        GridMinimum best) {
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      for (int l = 0; l < 5; ++l) {
        const Vec3 p = lo + Vec3(i * step.x(), j * step.y(), l * step.z());
        const double v = binormal_violation(k2, alpha_t, tangents, p);
        if (v < best.value) best = {v, p};
      }
    }
  }
  return best;
}

}  // namespace

PlanarityReport theorem4_verdict(const FrameField& field, const Tolerances& tol,
                                 int gauge_count) {
  if (field.kind != FrameKind::rm) {
    throw CurveError(ErrorKind::input, "planarity verdict needs an RM frame field");
  }
  PlanarityReport report;
  try {
    report.plane = fit_plane(field.points);
  } catch (const CurveError& e) {
    if (e.kind() != ErrorKind::degenerate_fit) throw;
    // A segment lies in every plane containing it; take the one spanned by t and n1.
    Vec3 centroid = Vec3::Zero();
    for (const Vec3& x : field.points) centroid += x;
    report.plane.point = centroid / static_cast<double>(field.size());
    report.plane.normal = field.frames.front().e3;
    double acc = 0.0;
    for (const Vec3& x : field.points) {
      const double d = (x - report.plane.point).dot(report.plane.normal);
      acc += d * d;
    }
    report.plane.rms_residual = std::sqrt(acc / static_cast<double>(field.size()));
  }

  Vec3 lo = field.points.front(), hi = field.points.front();
  for (const Vec3& x : field.points) {
    lo = lo.cwiseMin(x);
    hi = hi.cwiseMax(x);
  }
  report.diameter = (hi - lo).norm();

  if (report.plane.rms_residual < tol.plane * report.diameter) {
    report.verdict = PlanarityVerdict::planar;
    const Vec3& normal = report.plane.normal;
    const Vec3 mid = field.points[field.size() / 2];
    report.anchor = mid - (mid - report.plane.point).dot(normal) * normal;
    // Rotate the gauge so that n2 lies along the plane normal.
    const Frame& f0 = field.frames.front();
    const Vec3 target = normal.dot(f0.e3) >= 0.0 ? normal : Vec3(-normal);
    const Vec3 in_normal_plane = (target - target.dot(f0.e1) * f0.e1).normalized();
    report.gauge_angle = signed_angle(f0.e3, in_normal_plane, f0.e1);
    const FrameField aligned = rotate_gauge(field, report.gauge_angle);
    report.system_residual = rm_plane_decomposition(aligned, report.anchor).max_residual();
    return report;
  }

  std::vector<Vec3> tangents(field.size());
  std::vector<double> alpha_t(field.size());
  for (std::size_t k = 0; k < field.size(); ++k) {
    tangents[k] = field.frames[k].e1;
    alpha_t[k] = field.points[k].dot(tangents[k]);
  }
  const Vec3 coarse = (hi - lo) / 4.0;
  report.certificate = std::numeric_limits<double>::infinity();
  for (int g = 0; g < gauge_count; ++g) {
    const double c = 2.0 * std::numbers::pi * g / gauge_count;
    const double cc = std::cos(c), sc = std::sin(c);
    std::vector<double> k2(field.size());
    for (std::size_t k = 0; k < field.size(); ++k) k2[k] = -sc * field.k1[k] + cc * field.k2[k];

    GridMinimum best = search_grid(k2, alpha_t, tangents, lo, coarse, GridMinimum{});
    best = search_grid(k2, alpha_t, tangents, best.point - coarse, coarse / 2.0, best);
    report.gauges.push_back(c);
    report.gauge_certificates.push_back(best.value);
    if (best.value < report.certificate) {
      report.certificate = best.value;
      report.certificate_point = best.point;
    }
  }
  report.verdict = report.certificate > tol.violation_certificate
                       ? PlanarityVerdict::not_planar
                       : PlanarityVerdict::indeterminate;
  return report;
}

}  // namespace curveframe
