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

#include <vector>

#include "curveframe/curve.hpp"

namespace curveframe {

/// Default number of grid intervals for tables and analysis grids.
inline constexpr int kDefaultGrid = 4096;

/// Cumulative arc length on a uniform parameter grid, with inverse lookup
/// s -> t by monotone cubic Hermite interpolation.
struct ArcLengthTable {
  std::vector<double> ts;
  std::vector<double> ss;
  std::vector<double> dtds;  // 1 / speed at each node
  double total_length = 0.0;

  /// Monotone cubic interpolation of the table.
  double t_of_s(double s) const;
  /// Table interval [k, k + 1] containing s.
  int interval(double s) const;
};

/// Composite Simpson quadrature of |alpha'(t)| over n >= 16 uniform intervals.
ArcLengthTable build_arclength_table(const Curve& curve, int n = kDefaultGrid);

/// A curve bundled with its arc-length table; the entry point for every
/// operation that works in arc length.
class ArcLengthCurve {
 public:
  explicit ArcLengthCurve(Curve curve, int table_intervals = kDefaultGrid);
  explicit ArcLengthCurve(CurveSpec spec, int table_intervals = kDefaultGrid)
      : ArcLengthCurve(Curve(std::move(spec)), table_intervals) {}

  const Curve& curve() const { return curve_; }
  const ArcLengthTable& table() const { return table_; }
  double length() const { return table_.total_length; }

  double t_of_s(double s) const;
  /// Jet with respect to the curve's own parameter, located by arc length.
  Jet jet_at(double s, int order) const { return curve_.jet(t_of_s(s), order); }
  /// Jet with respect to arc length.
  Jet unit_jet_at(double s, int order) const { return unit_speed_jet(jet_at(s, order)); }
  Vec3 position_at(double s) const { return jet_at(s, 0).d[0]; }

  /// Position and tangent agree at both ends.
  bool is_closed(double tol = 1e-9) const;

 private:
  Curve curve_;
  ArcLengthTable table_;
};

/// Jets sampled at uniform arc length.
struct ArcLengthSamples {
  std::vector<double> s;
  std::vector<Jet> jets;
  double length = 0.0;

  std::size_t size() const { return s.size(); }
  double spacing() const { return s.size() > 1 ? s[1] - s[0] : 0.0; }
};

enum class Spacing {
  endpoints,  // n samples including both ends, spacing L / (n - 1)
  periodic,   // n samples starting at s = 0, spacing L / n
  automatic,  // periodic for closed curves, endpoints otherwise
};

ArcLengthSamples resample_by_arclength(const ArcLengthCurve& curve, int n, int order = 3,
                                       Spacing spacing = Spacing::endpoints);

}  // namespace curveframe
