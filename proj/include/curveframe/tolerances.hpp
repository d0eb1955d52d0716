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

// Thresholds shared across modules. Callers scale them uniformly with
// Tolerances::scaled (the CLI's --tol-scale).

namespace curveframe {

struct Tolerances {
  double orthonormality = 1e-10;
  /// Curvature below this counts as an inflection.
  double inflection = 1e-8;
  /// |tau| below this counts as a zero-torsion point.
  double torsion = 1e-8;
  double relative = 1e-8;
  /// Development line residual, relative to max |(k1, k2)|.
  double line_residual = 1e-6;
  /// Minimum development-line distance from the origin for a spherical verdict.
  double line_origin = 1e-9;
  /// Max |(|x - p| - r)| / r for on-sphere preconditions.
  double on_sphere = 1e-8;
  /// Plane-fit rms residual relative to the curve diameter.
  double plane = 1e-8;
  double rm_plane_system = 1e-6;
  /// Violation certificate above which a non-planar curve is certified off every RM plane.
  double violation_certificate = 1e-2;
  double contact = 1e-6;
  /// Discrete RM defect max |<n1', n2>| accepted for an rm field.
  double rm_defect = 1e-6;
  /// max |sigma| below which the spherical deviation counts as zero.
  double spherical_deviation = 1e-5;
  /// Design-matrix condition number above which fits are degenerate.
  double fit_condition = 1e12;

  Tolerances scaled(double factor) const {
    Tolerances t = *this;
    t.orthonormality *= factor;
    t.inflection *= factor;
    t.torsion *= factor;
    t.relative *= factor;
    t.line_residual *= factor;
    t.line_origin *= factor;
    t.on_sphere *= factor;
    t.plane *= factor;
    t.rm_plane_system *= factor;
    t.violation_certificate *= factor;
    t.contact *= factor;
    t.rm_defect *= factor;
    t.spherical_deviation *= factor;
    return t;
  }
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol;
  return tol;
}

}  // namespace curveframe
