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

#include "curveframe/sweep.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Geometry>

#include "curveframe/error.hpp"

namespace curveframe {

TubeMesh sweep_tube(const FrameField& field, double radius, int segments) {
  if (segments < 3) throw CurveError(ErrorKind::input, "tube needs at least 3 segments");
  if (!(radius > 0.0)) throw CurveError(ErrorKind::input, "tube radius must be positive");
  if (field.size() < 2) throw CurveError(ErrorKind::insufficient_data, "tube needs two frames");
  TubeMesh mesh;
  const int rings = static_cast<int>(field.size());
  mesh.vertices.reserve(static_cast<std::size_t>(rings) * segments);
  for (int i = 0; i < rings; ++i) {
    const Frame& f = field.frames[i];
    for (int j = 0; j < segments; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / segments;
      mesh.vertices.push_back(field.points[i] +
                              radius * (std::cos(phi) * f.e2 + std::sin(phi) * f.e3));
    }
  }
  for (int i = 0; i + 1 < rings; ++i) {
    for (int j = 0; j < segments; ++j) {
      const int a = i * segments + j;
      const int b = i * segments + (j + 1) % segments;
      const int c = a + segments;
      const int d = b + segments;
      mesh.triangles.push_back({a, b, d});
      mesh.triangles.push_back({a, d, c});
    }
  }
  return mesh;
}

double total_twist(const FrameField& field) {
  double twist = 0.0;
  for (std::size_t i = 0; i + 1 < field.size(); ++i) {
    const Frame& f0 = field.frames[i];
    const Frame& f1 = field.frames[i + 1];
    const Vec3 axis = f0.e1.cross(f1.e1);
    const double sin_a = axis.norm();
    Vec3 moved = f0.e2;
    if (sin_a > 1e-15) {
      const double angle = std::atan2(sin_a, f0.e1.dot(f1.e1));
      moved = Eigen::AngleAxisd(angle, axis / sin_a) * f0.e2;
    }
    twist += signed_angle(moved, f1.e2, f1.e1);
  }
  return twist;
}

std::string to_obj(const TubeMesh& mesh, const std::string& comment) {
  std::ostringstream out;
  out.precision(12);
  if (!comment.empty()) out << "# " << comment << '\n';
  for (const Vec3& v : mesh.vertices) out << "v " << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
  for (const auto& t : mesh.triangles)
    out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  return out.str();
}

}  // namespace curveframe
