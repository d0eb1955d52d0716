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

#include "curveframe/curve.hpp"

#include <algorithm>
#include <cmath>

#include "curveframe/error.hpp"
#include "curveframe/stencil.hpp"
#include "curveframe/taylor.hpp"

namespace curveframe {

std::string to_string(CurveFamily family) {
  switch (family) {
    case CurveFamily::circle: return "circle";
    case CurveFamily::helix: return "helix";
    case CurveFamily::spherical_fourier: return "spherical_fourier";
    case CurveFamily::polynomial: return "polynomial";
    case CurveFamily::bezier: return "bezier";
    case CurveFamily::polyline: return "polyline";
    case CurveFamily::ellipse: return "ellipse";
    case CurveFamily::fourier: return "fourier";
  }
  return "unknown";
}

CurveFamily CurveSpec::family() const {
  return std::visit(
      [](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, CircleParams>) return CurveFamily::circle;
        if constexpr (std::is_same_v<P, HelixParams>) return CurveFamily::helix;
        if constexpr (std::is_same_v<P, SphericalFourierParams>) {
          return CurveFamily::spherical_fourier;
        }
        if constexpr (std::is_same_v<P, PolynomialParams>) return CurveFamily::polynomial;
        if constexpr (std::is_same_v<P, BezierParams>) return CurveFamily::bezier;
        if constexpr (std::is_same_v<P, PolylineParams>) return CurveFamily::polyline;
        if constexpr (std::is_same_v<P, EllipseParams>) return CurveFamily::ellipse;
        if constexpr (std::is_same_v<P, FourierCurveParams>) return CurveFamily::fourier;
      },
      params);
}

Jet unit_speed_jet(const Jet& jet) {
  const VecSeries alpha = VecSeries::from_derivatives(jet.d);
  VecSeries velocity;
  for (int k = 0; k < 4; ++k) velocity.c[k] = (k + 1) * alpha.c[k + 1];
  const Series speed = sqrt(dot(velocity, velocity));
  const Series arclength = integrate(speed);
  const Series inverse = revert(arclength);
  const VecSeries reparam = compose(alpha, inverse);

  Jet out;
  out.t = jet.t;
  out.order = jet.order;
  for (int k = 0; k <= jet.order; ++k) out.d[k] = reparam.derivative(k);
  return out;
}

namespace {

// k-th derivatives of cos(x) and sin(x).
std::pair<double, double> trig_derivative(double x, int k) {
  const double c = std::cos(x);
  const double s = std::sin(x);
  switch (k % 4) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

std::array<double, 5> fourier_derivatives(const FourierSeries& f, double t) {
  std::array<double, 5> out{};
  out[0] = f.constant + f.linear * t;
  out[1] = f.linear;
  const std::size_t modes = std::max(f.cos.size(), f.sin.size());
  for (std::size_t m = 0; m < modes; ++m) {
    const double w = (m + 1) * f.omega;
    const double a = m < f.cos.size() ? f.cos[m] : 0.0;
    const double b = m < f.sin.size() ? f.sin[m] : 0.0;
    double wk = 1.0;
    for (int k = 0; k <= 4; ++k) {
      const auto [ck, sk] = trig_derivative(w * t, k);
      out[k] += wk * (a * ck + b * sk);
      wk *= w;
    }
  }
  return out;
}

std::array<Vec3, 5> vec_fourier_derivatives(const VecFourierSeries& f, double t) {
  std::array<Vec3, 5> out;
  out.fill(Vec3::Zero());
  out[0] = f.constant + f.linear * t;
  out[1] = f.linear;
  const std::size_t modes = std::max(f.cos.size(), f.sin.size());
  for (std::size_t m = 0; m < modes; ++m) {
    const double w = (m + 1) * f.omega;
    const Vec3 a = m < f.cos.size() ? f.cos[m] : Vec3::Zero();
    const Vec3 b = m < f.sin.size() ? f.sin[m] : Vec3::Zero();
    double wk = 1.0;
    for (int k = 0; k <= 4; ++k) {
      const auto [ck, sk] = trig_derivative(w * t, k);
      out[k] += wk * (ck * a + sk * b);
      wk *= w;
    }
  }
  return out;
}

std::array<Vec3, 5> circle_derivatives(const Vec3& center, double radius, double omega,
                                       double angle, const Vec3& u, const Vec3& v) {
  std::array<Vec3, 5> out;
  double wk = radius;
  for (int k = 0; k <= 4; ++k) {
    const auto [ck, sk] = trig_derivative(angle, k);
    out[k] = wk * (ck * u + sk * v);
    wk *= omega;
  }
  out[0] += center;
  return out;
}

std::array<Vec3, 5> spherical_fourier_derivatives(const SphericalFourierParams& p, double t) {
  const Series polar = Series::from_derivatives(fourier_derivatives(p.polar, t));
  const Series azimuth = Series::from_derivatives(fourier_derivatives(p.azimuth, t));
  const auto sp = sincos(polar);
  const auto sa = sincos(azimuth);
  const Series x = sp.sin * sa.cos;
  const Series y = sp.sin * sa.sin;
  const Series& z = sp.cos;
  std::array<Vec3, 5> out;
  for (int k = 0; k <= 4; ++k) {
    out[k] = p.radius * Vec3(x.derivative(k), y.derivative(k), z.derivative(k));
  }
  out[0] += p.center;
  return out;
}

std::array<Vec3, 5> polynomial_derivatives(const std::vector<Vec3>& coeffs, double t) {
  std::array<Vec3, 5> out;
  out.fill(Vec3::Zero());
  const int degree = static_cast<int>(coeffs.size()) - 1;
  for (int k = 0; k <= 4; ++k) {
    // Horner on the k-th derivative coefficients j!/(j-k)! c_j.
    Vec3 acc = Vec3::Zero();
    for (int j = degree; j >= k; --j) {
      double falling = 1.0;
      for (int i = 0; i < k; ++i) falling *= (j - i);
      acc = acc * t + falling * coeffs[j];
    }
    out[k] = acc;
  }
  return out;
}

Vec3 de_casteljau(std::vector<Vec3> pts, double u) {
  for (std::size_t level = pts.size(); level > 1; --level) {
    for (std::size_t i = 0; i + 1 < level; ++i) pts[i] = (1.0 - u) * pts[i] + u * pts[i + 1];
  }
  return pts.empty() ? Vec3::Zero() : pts[0];
}

std::array<Vec3, 5> bezier_derivatives(const std::vector<Vec3>& control, double u,
                                       double scale) {
  std::array<Vec3, 5> out;
  out.fill(Vec3::Zero());
  std::vector<Vec3> pts = control;
  double factor = 1.0;
  for (int k = 0; k <= 4 && !pts.empty(); ++k) {
    out[k] = factor * de_casteljau(pts, u);
    const int degree = static_cast<int>(pts.size()) - 1;
    std::vector<Vec3> hodograph;
    for (int i = 0; i < degree; ++i) hodograph.push_back(degree * (pts[i + 1] - pts[i]));
    pts = std::move(hodograph);
    factor *= scale;
  }
  return out;
}

void orthonormalize(Vec3& u, Vec3& v, const char* what) {
  const double nu = u.norm();
  if (nu == 0.0) throw CurveError(ErrorKind::input, std::string(what) + ": zero basis vector u");
  u /= nu;
  v -= v.dot(u) * u;
  const double nv = v.norm();
  if (nv < 1e-12) {
    throw CurveError(ErrorKind::input, std::string(what) + ": basis vectors u, v are parallel");
  }
  v /= nv;
}

}  // namespace

namespace detail {

// Polyline pipeline: clamped cubic spline through the points on chord-length
// parameter, resampled at uniform arc length, differentiated by stencils.
struct PolylineData {
  double length = 0.0;
  double spacing = 0.0;
  std::array<std::vector<Vec3>, 4> nodes;  // derivative order 0..3 at uniform s

  Jet evaluate(double s, int order) const {
    const int n = static_cast<int>(nodes[0].size());
    int k = static_cast<int>(std::floor(s / spacing));
    k = std::clamp(k - 1, 0, n - 4);
    std::array<double, 4> xs{};
    for (int i = 0; i < 4; ++i) xs[i] = (k + i) * spacing;
    Jet jet;
    jet.t = s;
    jet.order = std::min(order, 3);
    for (int i = 0; i < 4; ++i) {
      double w = 1.0;
      for (int j = 0; j < 4; ++j) {
        if (j != i) w *= (s - xs[j]) / (xs[i] - xs[j]);
      }
      for (int m = 0; m <= jet.order; ++m) jet.d[m] += w * nodes[m][k + i];
    }
    return jet;
  }
};

namespace {

struct CubicSpline {
  std::vector<double> knots;
  std::vector<Vec3> values;
  std::vector<Vec3> slopes;

  // Hermite segment evaluation.
  Vec3 value(double u) const { return eval(u, 0); }
  Vec3 derivative(double u) const { return eval(u, 1); }

  Vec3 eval(double u, int order) const {
    const int n = static_cast<int>(knots.size());
    int i = static_cast<int>(std::upper_bound(knots.begin(), knots.end(), u) - knots.begin()) - 1;
    i = std::clamp(i, 0, n - 2);
    const double h = knots[i + 1] - knots[i];
    const double x = (u - knots[i]) / h;
    const Vec3& p0 = values[i];
    const Vec3& p1 = values[i + 1];
    const Vec3 m0 = slopes[i] * h;
    const Vec3 m1 = slopes[i + 1] * h;
    if (order == 0) {
      const double x2 = x * x, x3 = x2 * x;
      return (2 * x3 - 3 * x2 + 1) * p0 + (x3 - 2 * x2 + x) * m0 + (-2 * x3 + 3 * x2) * p1 +
             (x3 - x2) * m1;
    }
    const double x2 = x * x;
    return ((6 * x2 - 6 * x) * p0 + (3 * x2 - 4 * x + 1) * m0 + (-6 * x2 + 6 * x) * p1 +
            (3 * x2 - 2 * x) * m1) /
           h;
  }
};

CubicSpline clamped_spline(const std::vector<double>& u, const std::vector<Vec3>& p) {
  const int n = static_cast<int>(u.size());
  auto end_slope = [&](int first, int step) {
    std::array<double, 4> nodes{};
    for (int i = 0; i < 4; ++i) nodes[i] = u[first + i * step];
    const auto w = fd_weights(nodes, u[first], 1);
    Vec3 m = Vec3::Zero();
    for (int i = 0; i < 4; ++i) m += w[i] * p[first + i * step];
    return m;
  };

  // Tridiagonal system for the knot slopes with prescribed end slopes.
  std::vector<Vec3> slopes(n, Vec3::Zero());
  slopes[0] = end_slope(0, 1);
  slopes[n - 1] = end_slope(n - 1, -1);
  std::vector<double> lower(n, 0.0), diag(n, 1.0), upper(n, 0.0);
  std::vector<Vec3> rhs(n, Vec3::Zero());
  rhs[0] = slopes[0];
  rhs[n - 1] = slopes[n - 1];
  for (int i = 1; i + 1 < n; ++i) {
    const double h0 = u[i] - u[i - 1];
    const double h1 = u[i + 1] - u[i];
    lower[i] = h1;
    diag[i] = 2.0 * (h0 + h1);
    upper[i] = h0;
    rhs[i] = 3.0 * (h1 * (p[i] - p[i - 1]) / h0 + h0 * (p[i + 1] - p[i]) / h1);
  }
  for (int i = 1; i < n; ++i) {
    const double f = lower[i] / diag[i - 1];
    diag[i] -= f * upper[i - 1];
    rhs[i] -= f * rhs[i - 1];
  }
  slopes[n - 1] = rhs[n - 1] / diag[n - 1];
  for (int i = n - 2; i >= 0; --i) slopes[i] = (rhs[i] - upper[i] * slopes[i + 1]) / diag[i];
  return CubicSpline{u, p, slopes};
}

}  // namespace

std::shared_ptr<const PolylineData> build_polyline(const std::vector<Vec3>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 5) {
    throw CurveError(ErrorKind::insufficient_data, "polyline needs at least 5 points");
  }
  std::vector<double> u(n, 0.0);
  for (int i = 1; i < n; ++i) {
    const double chord = (points[i] - points[i - 1]).norm();
    if (!(chord > 0.0)) {
      throw CurveError(ErrorKind::regularity,
                       "coincident consecutive polyline points at index " + std::to_string(i));
    }
    u[i] = u[i - 1] + chord;
  }
  const CubicSpline spline = clamped_spline(u, points);

  // Cumulative arc length of the spline on a fine Simpson grid.
  constexpr int kSub = 16;
  std::vector<double> fine_u, fine_s;
  fine_u.reserve((n - 1) * kSub + 1);
  fine_s.reserve((n - 1) * kSub + 1);
  fine_u.push_back(0.0);
  fine_s.push_back(0.0);
  auto speed = [&](double x) { return spline.derivative(x).norm(); };
  for (int i = 0; i + 1 < n; ++i) {
    const double h = (u[i + 1] - u[i]) / kSub;
    for (int j = 0; j < kSub; ++j) {
      const double a = u[i] + j * h;
      const double b = (j + 1 == kSub) ? u[i + 1] : a + h;
      const double seg = (b - a) / 6.0 * (speed(a) + 4.0 * speed(0.5 * (a + b)) + speed(b));
      fine_u.push_back(b);
      fine_s.push_back(fine_s.back() + seg);
    }
  }

  auto data = std::make_shared<PolylineData>();
  data->length = fine_s.back();
  const int m = std::max(2 * n, 256);
  data->spacing = data->length / (m - 1);

  std::vector<Vec3> samples(m);
  for (int k = 0; k < m; ++k) {
    const double target = k * data->spacing;
    const int j = std::clamp(
        static_cast<int>(std::upper_bound(fine_s.begin(), fine_s.end(), target) -
                         fine_s.begin()) - 1,
        0, static_cast<int>(fine_s.size()) - 2);
    // Newton on the arc length inside one fine cell.
    double x = fine_u[j] + (target - fine_s[j]) / (fine_s[j + 1] - fine_s[j]) *
                               (fine_u[j + 1] - fine_u[j]);
    for (int it = 0; it < 6; ++it) {
      const double a = fine_u[j];
      const double s = fine_s[j] + (x - a) / 6.0 * (speed(a) + 4.0 * speed(0.5 * (a + x)) +
                                                    speed(x));
      x -= (s - target) / speed(x);
    }
    samples[k] = spline.value(std::clamp(x, 0.0, u.back()));
  }
  data->nodes[0] = samples;
  for (int order = 1; order <= 3; ++order) {
    data->nodes[order] = differentiate(std::span<const Vec3>(samples), data->spacing, order);
  }
  return data;
}

}  // namespace detail

Curve::Curve(CurveSpec spec) : spec_(std::move(spec)) {
  if (auto* c = std::get_if<CircleParams>(&spec_.params)) {
    if (!(c->radius > 0.0)) throw CurveError(ErrorKind::input, "circle radius must be positive");
    orthonormalize(c->u, c->v, "circle");
  } else if (auto* e = std::get_if<EllipseParams>(&spec_.params)) {
    if (!(e->semi_a > 0.0 && e->semi_b > 0.0)) {
      throw CurveError(ErrorKind::input, "ellipse semi-axes must be positive");
    }
    orthonormalize(e->u, e->v, "ellipse");
  } else if (auto* sf = std::get_if<SphericalFourierParams>(&spec_.params)) {
    if (!(sf->radius > 0.0)) {
      throw CurveError(ErrorKind::input, "sphere radius must be positive");
    }
  } else if (auto* poly = std::get_if<PolynomialParams>(&spec_.params)) {
    if (poly->coefficients.size() < 2) {
      throw CurveError(ErrorKind::input, "polynomial needs at least 2 coefficients");
    }
  } else if (auto* bz = std::get_if<BezierParams>(&spec_.params)) {
    if (bz->control_points.size() < 2) {
      throw CurveError(ErrorKind::input, "bezier needs at least 2 control points");
    }
  } else if (auto* pl = std::get_if<PolylineParams>(&spec_.params)) {
    polyline_ = detail::build_polyline(pl->points);
    spec_.t0 = 0.0;
    spec_.t1 = polyline_->length;
  }
  t0_ = spec_.t0;
  t1_ = spec_.t1;
  if (!(t1_ > t0_)) throw CurveError(ErrorKind::domain, "empty parameter domain");
  if (!spec_.motion.rotation.isUnitary(1e-9) || spec_.motion.rotation.determinant() < 0.0) {
    throw CurveError(ErrorKind::input, "motion rotation must be a proper rotation matrix");
  }
}

int Curve::max_order() const { return polyline_ ? 3 : 4; }

Jet Curve::raw_jet(double t, int order) const {
  Jet jet;
  jet.t = t;
  jet.order = std::min(order, max_order());
  if (polyline_) return polyline_->evaluate(t, order);

  jet.d = std::visit(
      [&](const auto& p) -> std::array<Vec3, 5> {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, CircleParams>) {
          return circle_derivatives(p.center, p.radius, p.omega, p.omega * t + p.phase, p.u, p.v);
        } else if constexpr (std::is_same_v<P, HelixParams>) {
          const double c = std::cos(t), s = std::sin(t);
          return {Vec3(p.a * c, p.a * s, p.b * t), Vec3(-p.a * s, p.a * c, p.b),
                  Vec3(-p.a * c, -p.a * s, 0.0), Vec3(p.a * s, -p.a * c, 0.0),
                  Vec3(p.a * c, p.a * s, 0.0)};
        } else if constexpr (std::is_same_v<P, EllipseParams>) {
          std::array<Vec3, 5> out;
          for (int k = 0; k <= 4; ++k) {
            const auto [ck, sk] = trig_derivative(t, k);
            out[k] = p.semi_a * ck * p.u + p.semi_b * sk * p.v;
          }
          out[0] += p.center;
          return out;
        } else if constexpr (std::is_same_v<P, SphericalFourierParams>) {
          return spherical_fourier_derivatives(p, t);
        } else if constexpr (std::is_same_v<P, PolynomialParams>) {
          return polynomial_derivatives(p.coefficients, t);
        } else if constexpr (std::is_same_v<P, BezierParams>) {
          const double span = t1_ - t0_;
          return bezier_derivatives(p.control_points, (t - t0_) / span, 1.0 / span);
        } else if constexpr (std::is_same_v<P, FourierCurveParams>) {
          return vec_fourier_derivatives(p.series, t);
        } else {
          return {};
        }
      },
      spec_.params);
  for (int k = jet.order + 1; k <= 4; ++k) jet.d[k] = Vec3::Zero();
  return jet;
}

Jet Curve::jet(double t, int order) const {
  if (order < 0 || order > 4) throw CurveError(ErrorKind::input, "jet order must be 0..4");
  const double slack = 1e-12 * std::max(1.0, std::abs(t1_ - t0_));
  if (!(t >= t0_ - slack && t <= t1_ + slack)) {
    throw CurveError(ErrorKind::domain, "parameter " + std::to_string(t) + " outside [" +
                                            std::to_string(t0_) + ", " + std::to_string(t1_) +
                                            "]");
  }
  t = std::clamp(t, t0_, t1_);
  Jet jet = raw_jet(t, std::max(order, 1));
  if (!spec_.motion.is_identity()) {
    for (int k = 0; k <= 4; ++k) jet.d[k] = spec_.motion.rotation * jet.d[k];
    jet.d[0] += spec_.motion.translation;
  }
  if (!(jet.speed() > spec_.regularity_eps)) {
    throw CurveError(ErrorKind::regularity,
                     "speed " + std::to_string(jet.speed()) + " at t=" + std::to_string(t) +
                         " is below the regularity threshold");
  }
  jet.order = std::min(order, max_order());
  for (int k = jet.order + 1; k <= 4; ++k) jet.d[k] = Vec3::Zero();
  return jet;
}

}  // namespace curveframe
