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

#include "curveframe/frames.hpp"

#include <cmath>
#include <string>

#include "curveframe/error.hpp"
#include "curveframe/stencil.hpp"

namespace curveframe {

bool is_orthonormal(const Frame& f, double tol) {
  return std::abs(f.e1.norm() - 1.0) <= tol && std::abs(f.e2.norm() - 1.0) <= tol &&
         std::abs(f.e3.norm() - 1.0) <= tol && std::abs(f.e1.dot(f.e2)) <= tol &&
         std::abs(f.e1.dot(f.e3)) <= tol && std::abs(f.e2.dot(f.e3)) <= tol &&
         f.e1.cross(f.e2).dot(f.e3) > 0.0;
}

FrenetApparatus frenet_apparatus(const Jet& jet, const Tolerances& tol) {
  const Vec3& d1 = jet.d[1];
  const Vec3& d2 = jet.d[2];
  const double speed = d1.norm();
  const Vec3 cross = d1.cross(d2);
  const double cross_norm = cross.norm();

  FrenetApparatus out;
  out.kappa = cross_norm / (speed * speed * speed);
  if (jet.order < 2 || out.kappa <= tol.inflection) return out;

  Frame f;
  f.e1 = d1 / speed;
  f.e3 = cross / cross_norm;
  f.e2 = f.e3.cross(f.e1);
  out.frame = f;
  if (jet.order >= 3) out.tau = d1.dot(d2.cross(jet.d[3])) / (cross_norm * cross_norm);
  return out;
}

Frame default_initial_frame(const Jet& jet, const Tolerances& tol) {
  const FrenetApparatus fa = frenet_apparatus(jet, tol);
  if (fa.frame) return *fa.frame;
  Frame f;
  f.e1 = jet.d[1].normalized();
  for (int k = 0; k < 3; ++k) {
    const Vec3 axis = Vec3::Unit(k);
    const Vec3 normal = axis - axis.dot(f.e1) * f.e1;
    if (normal.norm() > 0.5) {
      f.e2 = normal.normalized();
      break;
    }
  }
  f.e3 = f.e1.cross(f.e2);
  return f;
}

namespace {

std::vector<double> uniform_grid(double length, int n) {
  std::vector<double> ss(n);
  for (int k = 0; k < n; ++k) ss[k] = (k + 1 == n) ? length : length * k / (n - 1);
  return ss;
}

FrenetApparatus frenet_or_throw(const Jet& jet, double s, const Tolerances& tol) {
  FrenetApparatus fa = frenet_apparatus(jet, tol);
  if (fa.is_inflection()) {
    throw CurveError(ErrorKind::inflection,
                     "Frenet frame undefined at s=" + std::to_string(s) +
                         " (curvature " + std::to_string(fa.kappa) + ")",
                     s);
  }
  return fa;
}

}  // namespace

FrameField frenet_field(const ArcLengthCurve& curve, int n, const Tolerances& tol) {
  if (n < 2) throw CurveError(ErrorKind::input, "frame field needs n >= 2");
  FrameField field;
  field.kind = FrameKind::frenet;
  field.ss = uniform_grid(curve.length(), n);
  for (double s : field.ss) {
    const Jet jet = curve.jet_at(s, 3);
    const FrenetApparatus fa = frenet_or_throw(jet, s, tol);
    field.points.push_back(jet.d[0]);
    field.frames.push_back(*fa.frame);
    field.k1.push_back(fa.kappa);
    field.k2.push_back(*fa.tau);
  }
  return field;
}

FrameField rmf_by_quadrature(const ArcLengthCurve& curve, int n, double theta0,
                             const Tolerances& tol) {
  if (n < 2) throw CurveError(ErrorKind::input, "frame field needs n >= 2");
  FrameField field;
  field.kind = FrameKind::rm;
  field.ss = uniform_grid(curve.length(), n);

  std::vector<FrenetApparatus> nodes;
  nodes.reserve(n);
  for (double s : field.ss) {
    const Jet jet = curve.jet_at(s, 3);
    nodes.push_back(frenet_or_throw(jet, s, tol));
    field.points.push_back(jet.d[0]);
  }

  // Per-interval Simpson with the torsion at the interval midpoint.
  field.theta.resize(n);
  field.theta[0] = theta0;
  for (int k = 0; k + 1 < n; ++k) {
    const double mid_s = 0.5 * (field.ss[k] + field.ss[k + 1]);
    const FrenetApparatus mid = frenet_or_throw(curve.jet_at(mid_s, 3), mid_s, tol);
    const double h = field.ss[k + 1] - field.ss[k];
    field.theta[k + 1] = field.theta[k] + h / 6.0 * (*nodes[k].tau + 4.0 * *mid.tau +
                                                     *nodes[k + 1].tau);
  }

  for (int k = 0; k < n; ++k) {
    const Frame& fr = *nodes[k].frame;
    const double c = std::cos(field.theta[k]);
    const double s = std::sin(field.theta[k]);
    Frame rm;
    rm.e1 = fr.e1;
    rm.e2 = c * fr.e2 - s * fr.e3;
    rm.e3 = s * fr.e2 + c * fr.e3;
    field.frames.push_back(rm);
    field.k1.push_back(nodes[k].kappa * c);
    field.k2.push_back(nodes[k].kappa * s);
  }
  return field;
}

FrameField rmf_by_double_reflection(const ArcLengthSamples& samples, const Frame& initial) {
  const std::size_t n = samples.size();
  if (n < 2) throw CurveError(ErrorKind::insufficient_data, "double reflection needs >= 2 samples");
  FrameField field;
  field.kind = FrameKind::rm;
  field.ss = samples.s;
  field.points.reserve(n);
  field.frames.reserve(n);

  std::vector<Vec3> tangents(n);
  for (std::size_t k = 0; k < n; ++k) {
    field.points.push_back(samples.jets[k].d[0]);
    tangents[k] = samples.jets[k].d[1].normalized();
  }

  Frame current = initial;
  field.frames.push_back(current);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Wang, Juttler, Zheng, Liu: "Computation of rotation minimizing frames".
    const Vec3 v1 = field.points[k + 1] - field.points[k];
    const double c1 = v1.squaredNorm();
    if (!(c1 > 0.0)) {
      throw CurveError(ErrorKind::degenerate_step,
                       "coincident consecutive samples at s=" + std::to_string(field.ss[k]),
                       field.ss[k]);
    }
    const Vec3 r_left = current.e2 - (2.0 / c1) * v1.dot(current.e2) * v1;
    const Vec3 t_left = current.e1 - (2.0 / c1) * v1.dot(current.e1) * v1;
    const Vec3 v2 = tangents[k + 1] - t_left;
    const double c2 = v2.squaredNorm();
    Vec3 r_next = r_left;
    if (c2 > 1e-300) r_next = r_left - (2.0 / c2) * v2.dot(r_left) * v2;

    Frame next;
    next.e1 = tangents[k + 1];
    next.e2 = (r_next - r_next.dot(next.e1) * next.e1).normalized();
    next.e3 = next.e1.cross(next.e2);
    field.frames.push_back(next);
    current = next;
  }

  field.k1.assign(n, 0.0);
  field.k2.assign(n, 0.0);
  if (n >= 5) {
    const auto dt = differentiate(std::span<const Vec3>(tangents), samples.spacing(), 1, kHighAccuracy);
    for (std::size_t k = 0; k < n; ++k) {
      field.k1[k] = dt[k].dot(field.frames[k].e2);
      field.k2[k] = dt[k].dot(field.frames[k].e3);
    }
  }
  return field;
}

FrameField rmf_by_double_reflection(const ArcLengthCurve& curve, int n, const Tolerances& tol) {
  const ArcLengthSamples samples = resample_by_arclength(curve, n, 3, Spacing::endpoints);
  return rmf_by_double_reflection(samples, default_initial_frame(samples.jets.front(), tol));
}

NormalDevelopment normal_development(const FrameField& field) {
  if (field.kind != FrameKind::rm) {
    throw CurveError(ErrorKind::input, "normal development needs an RM frame field");
  }
  NormalDevelopment dev;
  dev.ss = field.ss;
  dev.points.reserve(field.size());
  for (std::size_t k = 0; k < field.size(); ++k) dev.points.emplace_back(field.k1[k], field.k2[k]);
  return dev;
}

double rm_defect(const FrameField& field) {
  if (field.kind != FrameKind::rm) {
    throw CurveError(ErrorKind::input, "RM defect needs an RM frame field");
  }
  const std::size_t n = field.size();
  if (n < 3) throw CurveError(ErrorKind::insufficient_data, "RM defect needs >= 3 samples");
  const double h = field.spacing();
  std::vector<Vec3> n1(n);
  for (std::size_t k = 0; k < n; ++k) n1[k] = field.frames[k].e2;
  std::vector<Vec3> dn1;
  if (n >= 5) {
    dn1 = differentiate(std::span<const Vec3>(n1), h, 1);
  } else {
    dn1.assign(n, Vec3::Zero());
    for (std::size_t k = 1; k + 1 < n; ++k) dn1[k] = (n1[k + 1] - n1[k - 1]) / (2.0 * h);
  }
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    worst = std::max(worst, std::abs(dn1[k].dot(field.frames[k].e3)));
  }
  return worst;
}

FrameField rotate_gauge(const FrameField& field, double angle) {
  if (field.kind != FrameKind::rm) {
    throw CurveError(ErrorKind::input, "gauge rotation applies to RM frame fields");
  }
  FrameField out = field;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  for (std::size_t k = 0; k < field.size(); ++k) {
    const Frame& f = field.frames[k];
    out.frames[k].e2 = c * f.e2 + s * f.e3;
    out.frames[k].e3 = -s * f.e2 + c * f.e3;
    out.k1[k] = c * field.k1[k] + s * field.k2[k];
    out.k2[k] = -s * field.k1[k] + c * field.k2[k];
  }
  for (double& th : out.theta) th -= angle;
  return out;
}

}  // namespace curveframe
