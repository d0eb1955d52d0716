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

#include "curveframe/arclength.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "curveframe/error.hpp"

namespace curveframe {

namespace {

constexpr std::array<double, 8> kGaussNodes = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGaussWeights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

}  // namespace

ArcLengthTable build_arclength_table(const Curve& curve, int n) {
  if (n < 16) throw CurveError(ErrorKind::input, "arc-length table needs n >= 16");
  ArcLengthTable table;
  table.ts.resize(n + 1);
  table.ss.resize(n + 1);
  table.dtds.resize(n + 1);
  const double h = (curve.t1() - curve.t0()) / n;
  auto speed = [&](double t) { return curve.jet(t, 1).speed(); };

  double previous = speed(curve.t0());
  table.ts[0] = curve.t0();
  table.ss[0] = 0.0;
  table.dtds[0] = 1.0 / previous;
  for (int k = 0; k < n; ++k) {
    const double a = curve.t0() + k * h;
    const double b = (k + 1 == n) ? curve.t1() : curve.t0() + (k + 1) * h;
    const double mid = speed(0.5 * (a + b));
    const double next = speed(b);
    table.ts[k + 1] = b;
    table.ss[k + 1] = table.ss[k] + (b - a) / 6.0 * (previous + 4.0 * mid + next);
    table.dtds[k + 1] = 1.0 / next;
    previous = next;
  }
  table.total_length = table.ss.back();
  return table;
}

int ArcLengthTable::interval(double s) const {
  const int n = static_cast<int>(ss.size()) - 1;
  const int k = static_cast<int>(std::upper_bound(ss.begin(), ss.end(), s) - ss.begin()) - 1;
  return std::clamp(k, 0, n - 1);
}

double ArcLengthTable::t_of_s(double s) const {
  if (s <= 0.0) return ts.front();
  if (s >= total_length) return ts.back();
  const int k = interval(s);
  const double h = ss[k + 1] - ss[k];
  const double secant = (ts[k + 1] - ts[k]) / h;
  double m0 = dtds[k];
  double m1 = dtds[k + 1];
  // Fritsch-Carlson limiter keeps the interpolant monotone.
  const double a = m0 / secant;
  const double b = m1 / secant;
  const double r = a * a + b * b;
  if (r > 9.0) {
    const double scale = 3.0 / std::sqrt(r);
    m0 = scale * a * secant;
    m1 = scale * b * secant;
  }
  const double x = (s - ss[k]) / h;
  const double x2 = x * x, x3 = x2 * x;
  return (2 * x3 - 3 * x2 + 1) * ts[k] + (x3 - 2 * x2 + x) * h * m0 +
         (-2 * x3 + 3 * x2) * ts[k + 1] + (x3 - x2) * h * m1;
}

ArcLengthCurve::ArcLengthCurve(Curve curve, int table_intervals)
    : curve_(std::move(curve)), table_(build_arclength_table(curve_, table_intervals)) {}

double ArcLengthCurve::t_of_s(double s) const {
  const double slack = 1e-10 * std::max(1.0, length());
  if (s < -slack || s > length() + slack) {
    throw CurveError(ErrorKind::domain,
                     "arc length " + std::to_string(s) + " outside [0, " +
                         std::to_string(length()) + "]",
                     s);
  }
  if (s <= 0.0) return table_.ts.front();
  if (s >= length()) return table_.ts.back();
  const int k = table_.interval(s);
  const double ta = table_.ts[k];
  double t = table_.t_of_s(s);
  for (int iter = 0; iter < 3; ++iter) {
    const double mid = 0.5 * (t + ta);
    const double half = 0.5 * (t - ta);
    double arc = 0.0;
    for (int i = 0; i < 8; ++i) {
      arc += kGaussWeights[i] * curve_.jet(mid + half * kGaussNodes[i], 1).speed();
    }
    const double step = (table_.ss[k] + half * arc - s) / curve_.jet(t, 1).speed();
    t = std::clamp(t - step, curve_.t0(), curve_.t1());
    if (std::abs(step) <= 1e-15 * (std::abs(t) + 1.0)) break;
  }
  return t;
}

bool ArcLengthCurve::is_closed(double tol) const {
  const Jet a = curve_.jet(curve_.t0(), 1);
  const Jet b = curve_.jet(curve_.t1(), 1);
  const double scale = std::max(1.0, length());
  return (a.d[0] - b.d[0]).norm() <= tol * scale &&
         (a.d[1].normalized() - b.d[1].normalized()).norm() <= tol * scale;
}

ArcLengthSamples resample_by_arclength(const ArcLengthCurve& curve, int n, int order,
                                       Spacing spacing) {
  if (n < 2) throw CurveError(ErrorKind::input, "resampling needs n >= 2");
  if (spacing == Spacing::automatic) {
    spacing = curve.is_closed() ? Spacing::periodic : Spacing::endpoints;
  }
  ArcLengthSamples out;
  out.length = curve.length();
  const double h = spacing == Spacing::periodic ? out.length / n : out.length / (n - 1);
  out.s.resize(n);
  out.jets.resize(n);
  for (int k = 0; k < n; ++k) {
    out.s[k] = (spacing == Spacing::endpoints && k == n - 1) ? out.length : k * h;
    out.jets[k] = curve.jet_at(out.s[k], order);
  }
  return out;
}

}  // namespace curveframe
