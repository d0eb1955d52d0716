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

namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 0.05;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Maps development coordinates (k1 right, k2 up) onto the square canvas.
struct Viewport {
  Vec2 center = Vec2::Zero();
  double half = 1.0;

  double x(double k1) const { return kSize * (0.5 + (k1 - center.x()) / (2.0 * half)); }
  double y(double k2) const { return kSize * (0.5 - (k2 - center.y()) / (2.0 * half)); }
};

}  // namespace

std::string devplot_svg(const ArcLengthCurve& curve, int samples, const Tolerances& tol) {
  const FrameField field = compute_frames(curve, FrameMethod::rmf_double_reflection, samples, tol);
  const NormalDevelopment dev = normal_development(field);
  const SphericalityVerdict v = sphericality_test(dev, tol);

  Vec2 lo = Vec2::Zero(), hi = Vec2::Zero();
  for (const Vec2& p : dev.points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  Viewport view;
  view.center = 0.5 * (lo + hi);
  const double extent = std::max({hi.x() - lo.x(), hi.y() - lo.y(), 1e-12});
  view.half = 0.5 * extent / (1.0 - 2.0 * kMargin);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  svg << "<title>normal development of " << escape(curve.curve().spec().name) << "</title>\n";
  svg << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

  // Axes through the origin when visible.
  svg << "<g stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  svg << "<line x1=\"0\" y1=\"" << fmt(view.y(0.0)) << "\" x2=\"800\" y2=\"" << fmt(view.y(0.0))
      << "\"/>\n";
  svg << "<line x1=\"" << fmt(view.x(0.0)) << "\" y1=\"0\" x2=\"" << fmt(view.x(0.0))
      << "\" y2=\"800\"/>\n";
  svg << "</g>\n";

  // Fitted line, clipped generously to the canvas.
  const double reach = 4.0 * view.half + (v.centroid - view.center).norm();
  const Vec2 a = v.centroid - reach * v.direction;
  const Vec2 b = v.centroid + reach * v.direction;
  svg << "<line id=\"fit\" x1=\"" << fmt(view.x(a.x())) << "\" y1=\"" << fmt(view.y(a.y()))
      << "\" x2=\"" << fmt(view.x(b.x())) << "\" y2=\"" << fmt(view.y(b.y()))
      << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";

  // Perpendicular from the origin to the line, length d.
  const Vec2 foot = v.distance * v.normal;
  svg << "<line id=\"distance\" x1=\"" << fmt(view.x(0.0)) << "\" y1=\"" << fmt(view.y(0.0))
      << "\" x2=\"" << fmt(view.x(foot.x())) << "\" y2=\"" << fmt(view.y(foot.y()))
      << "\" stroke=\"#2ca02c\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";

  svg << "<polyline id=\"development\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\" "
         "points=\"";
  for (std::size_t k = 0; k < dev.points.size(); ++k) {
    if (k) svg << ' ';
    svg << fmt(view.x(dev.points[k].x())) << ',' << fmt(view.y(dev.points[k].y()));
  }
  svg << "\"/>\n";
  svg << "<g fill=\"#1f77b4\">\n";
  const std::size_t stride = std::max<std::size_t>(1, dev.points.size() / 64);
  for (std::size_t k = 0; k < dev.points.size(); k += stride) {
    svg << "<circle cx=\"" << fmt(view.x(dev.points[k].x())) << "\" cy=\""
        << fmt(view.y(dev.points[k].y())) << "\" r=\"2\"/>\n";
  }
  svg << "</g>\n";

  svg << "<circle id=\"origin\" cx=\"" << fmt(view.x(0.0)) << "\" cy=\"" << fmt(view.y(0.0))
      << "\" r=\"5\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  svg << "<g font-family=\"monospace\" font-size=\"14\" fill=\"black\">\n";
  svg << "<text x=\"16\" y=\"24\">(k1, k2) of " << escape(curve.curve().spec().name) << "</text>\n";
  svg << "<text id=\"d\" x=\"16\" y=\"44\">d = " << sci(v.distance) << "</text>\n";
  svg << "<text id=\"inv-d\" x=\"16\" y=\"64\">1/d = "
      << (v.distance > 0.0 ? sci(1.0 / v.distance) : std::string("inf")) << "</text>\n";
  svg << "<text x=\"16\" y=\"84\">line residual = " << sci(v.line_residual) << "</text>\n";
  svg << "<text x=\"16\" y=\"104\">" << (v.spherical ? "spherical" : "not spherical")
      << "</text>\n";
  svg << "</g>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace curveframe::cli
