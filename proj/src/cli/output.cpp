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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "curveframe/cli.hpp"
#include "curveframe/error.hpp"
#include "curveframe/spherical.hpp"

namespace curveframe::cli {

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

FrameMethod parse_frame_method(const std::string& name) {
  if (name == "frenet") return FrameMethod::frenet;
  if (name == "rmf-quadrature") return FrameMethod::rmf_quadrature;
  if (name == "rmf-double-reflection") return FrameMethod::rmf_double_reflection;
  if (name == "rmf-spherical") return FrameMethod::rmf_spherical;
  throw CurveError(ErrorKind::input, "unknown frame method '" + name + "'");
}

namespace {

// Keeps every `stride`-th sample of a field computed on a finer grid.
FrameField subsample(const FrameField& fine, int stride) {
  FrameField out;
  out.kind = fine.kind;
  for (std::size_t k = 0; k < fine.size(); k += stride) {
    out.ss.push_back(fine.ss[k]);
    out.points.push_back(fine.points[k]);
    out.frames.push_back(fine.frames[k]);
    out.k1.push_back(fine.k1[k]);
    out.k2.push_back(fine.k2[k]);
    if (!fine.theta.empty()) out.theta.push_back(fine.theta[k]);
  }
  return out;
}

SphereFit fit_curve_sphere(const ArcLengthCurve& curve, const Tolerances& tol) {
  std::vector<Vec3> pts;
  constexpr int kFitSamples = 512;
  for (int k = 0; k <= kFitSamples; ++k) {
    pts.push_back(curve.position_at(curve.length() * k / kFitSamples));
  }
  return fit_sphere(pts, tol);
}

}  // namespace

FrameField compute_frames(const ArcLengthCurve& curve, FrameMethod method, int samples,
                          const Tolerances& tol) {
  if (samples < 2) throw CurveError(ErrorKind::input, "need at least 2 samples");
  if (method == FrameMethod::frenet) return frenet_field(curve, samples, tol);
  // Propagated fields are computed on a grid at least as fine as the arc-length table.
  const int intervals = samples - 1;
  const int table_intervals = static_cast<int>(curve.table().ts.size()) - 1;
  const int stride = std::max(1, (table_intervals + intervals - 1) / intervals);
  const int fine = intervals * stride + 1;
  switch (method) {
    case FrameMethod::rmf_quadrature:
      return subsample(rmf_by_quadrature(curve, fine, 0.0, tol), stride);
    case FrameMethod::rmf_double_reflection:
      return subsample(rmf_by_double_reflection(curve, fine, tol), stride);
    case FrameMethod::rmf_spherical:
      return subsample(spherical_rmf(curve, fit_curve_sphere(curve, tol), fine, tol), stride);
    case FrameMethod::frenet:
      break;
  }
  return frenet_field(curve, samples, tol);
}

std::string frames_csv(const FrameField& field) {
  std::ostringstream out;
  if (field.kind == FrameKind::rm) {
    out << "s,tx,ty,tz,n1x,n1y,n1z,n2x,n2y,n2z,k1,k2\n";
  } else {
    out << "s,tx,ty,tz,nx,ny,nz,bx,by,bz,kappa,tau\n";
  }
  for (std::size_t k = 0; k < field.size(); ++k) {
    const Frame& f = field.frames[k];
    out << format_number(field.ss[k]);
    for (const Vec3* v : {&f.e1, &f.e2, &f.e3}) {
      for (int i = 0; i < 3; ++i) out << ',' << format_number((*v)(i));
    }
    out << ',' << format_number(field.k1[k]) << ',' << format_number(field.k2[k]) << '\n';
  }
  return out.str();
}

std::string osculating_csv(const OsculatingSeries& series) {
  std::ostringstream out;
  out << "s,cx,cy,cz,R,sigma\n";
  for (std::size_t k = 0; k < series.ss.size(); ++k) {
    out << format_number(series.ss[k]) << ',' << format_number(series.centers[k].x()) << ','
        << format_number(series.centers[k].y()) << ',' << format_number(series.centers[k].z())
        << ',' << format_number(series.radii[k]) << ',' << format_number(series.sigma[k]) << '\n';
  }
  return out.str();
}

}  // namespace curveframe::cli
