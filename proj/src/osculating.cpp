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

#include "curveframe/osculating.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "curveframe/error.hpp"
#include "curveframe/stencil.hpp"

namespace curveframe {

namespace {

void require_twisted(double kappa, double tau, const Tolerances& tol, double s) {
  if (!(kappa > tol.inflection)) {
    throw CurveError(ErrorKind::inflection,
                     "curvature " + std::to_string(kappa) + " at s=" + std::to_string(s), s);
  }
  if (!(std::abs(tau) > tol.torsion)) {
    throw CurveError(ErrorKind::zero_torsion,
                     "torsion " + std::to_string(tau) + " at s=" + std::to_string(s) +
                         "; the osculating sphere has infinite radius",
                     s);
  }
}

// Stencil nodes s + j h, j in [-3, 3], slid inward to stay on [0, length].
std::vector<double> stencil_nodes(double s, double h, double length) {
  constexpr int kHalf = 3;
  if (length < 2 * kHalf * h) {
    throw CurveError(ErrorKind::numerical_differentiation,
                     "curve shorter than the differentiation stencil", s);
  }
  double first = s - kHalf * h;
  if (first < 0.0) first = 0.0;
  if (first + 2 * kHalf * h > length) first = length - 2 * kHalf * h;
  std::vector<double> nodes(2 * kHalf + 1);
  for (int j = 0; j <= 2 * kHalf; ++j) nodes[j] = first + j * h;
  return nodes;
}

double weighted_sum(const std::vector<double>& weights, const std::vector<double>& values) {
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) acc += weights[i] * values[i];
  return acc;
}

}  // namespace

OsculatingSphere osculating_sphere_frenet(const Jet& jet, double kappa, double tau,
                                          double kappa_prime, const Tolerances& tol) {
  require_twisted(kappa, tau, tol, jet.t);
  const FrenetApparatus fa = frenet_apparatus(jet, tol);
  if (!fa.frame) throw CurveError(ErrorKind::inflection, "Frenet frame undefined");
  const double rho = 1.0 / kappa;
  const double rho_prime = -kappa_prime / (kappa * kappa);
  const double lever = rho_prime / tau;
  OsculatingSphere sphere;
  sphere.center = jet.d[0] + rho * fa.frame->e2 + lever * fa.frame->e3;
  sphere.radius = std::sqrt(rho * rho + lever * lever);
  return sphere;
}

OsculatingSphere osculating_sphere_rm(double k1, double k2, double k1_prime, double k2_prime,
                                      const Frame& frame, const Vec3& position,
                                      const Tolerances& tol) {
  // k1 k2' - k1' k2 = tau kappa^2
  const double det = k1 * k2_prime - k1_prime * k2;
  const double kappa2 = k1 * k1 + k2 * k2;
  if (!(std::abs(det) > tol.torsion * kappa2) || !(kappa2 > 0.0)) {
    throw CurveError(ErrorKind::zero_torsion,
                     "k1 k2' - k1' k2 vanishes; not a twisted point");
  }
  const double beta1 = k2_prime / det;
  const double beta2 = -k1_prime / det;
  OsculatingSphere sphere;
  sphere.center = position + beta1 * frame.e2 + beta2 * frame.e3;
  sphere.radius = std::sqrt(beta1 * beta1 + beta2 * beta2);
  return sphere;
}

std::array<double, 4> contact_residuals(const OsculatingSphere& sphere, const Jet& unit_jet) {
  const Vec3 w = sphere.center - unit_jet.d[0];
  const Vec3& a1 = unit_jet.d[1];
  const Vec3& a2 = unit_jet.d[2];
  const Vec3& a3 = unit_jet.d[3];
  return {w.squaredNorm() - sphere.radius * sphere.radius, -2.0 * w.dot(a1),
          2.0 * a1.squaredNorm() - 2.0 * w.dot(a2), 6.0 * a1.dot(a2) - 2.0 * w.dot(a3)};
}

LocalGeometry local_geometry(const ArcLengthCurve& curve, double s, double h,
                             const Tolerances& tol) {
  LocalGeometry g;
  g.s = s;
  const Jet jet = curve.jet_at(s, 3);
  const FrenetApparatus fa = frenet_apparatus(jet, tol);
  g.kappa = fa.kappa;
  if (fa.is_inflection()) {
    throw CurveError(ErrorKind::inflection, "inflection at s=" + std::to_string(s), s);
  }
  g.tau = *fa.tau;
  g.frame = *fa.frame;
  g.unit_jet = unit_speed_jet(jet);
  require_twisted(g.kappa, g.tau, tol, s);

  const std::vector<double> nodes = stencil_nodes(s, h, curve.length());
  std::vector<double> rho_prime(nodes.size()), tau(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Jet u = curve.unit_jet_at(nodes[i], 3);
    const FrenetApparatus f = frenet_apparatus(u, tol);
    if (f.is_inflection()) {
      throw CurveError(ErrorKind::inflection,
                       "inflection inside the stencil at s=" + std::to_string(nodes[i]),
                       nodes[i]);
    }
    rho_prime[i] = -u.d[2].dot(u.d[3]) / (f.kappa * f.kappa * f.kappa);
    tau[i] = *f.tau;
  }
  const auto w1 = fd_weights(nodes, s, 1);
  g.rho = 1.0 / g.kappa;
  g.kappa_prime = g.unit_jet.d[2].dot(g.unit_jet.d[3]) / g.kappa;
  g.rho_prime = -g.kappa_prime * g.rho * g.rho;
  g.rho_second = weighted_sum(w1, rho_prime);
  g.tau_prime = weighted_sum(w1, tau);
  g.sigma = g.tau * g.rho + g.rho_second / g.tau - g.rho_prime * g.tau_prime / (g.tau * g.tau);

  const double lever = g.rho_prime / g.tau;
  g.sphere.s0 = s;
  g.sphere.center = jet.d[0] + g.rho * g.frame.e2 + lever * g.frame.e3;
  g.sphere.radius = std::sqrt(g.rho * g.rho + lever * lever);
  return g;
}

Vec3 osculating_center_velocity(const ArcLengthCurve& curve, double s, double h,
                                const Tolerances& tol) {
  const std::vector<double> nodes = stencil_nodes(s, h, curve.length());
  const auto w = fd_weights(nodes, s, 1);
  Vec3 acc = Vec3::Zero();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (w[i] != 0.0) acc += w[i] * local_geometry(curve, nodes[i], h, tol).sphere.center;
  }
  return acc;
}

SphericalDeviation spherical_deviation(std::span<const double> rho,
                                       std::span<const double> rho_prime,
                                       std::span<const double> tau, std::span<const double> ss,
                                       const Tolerances& tol) {
  const std::size_t n = ss.size();
  if (rho.size() != n || rho_prime.size() != n || tau.size() != n) {
    throw CurveError(ErrorKind::input, "spherical deviation series differ in length");
  }
  std::vector<double> lever(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!(std::abs(tau[k]) > tol.torsion)) {
      throw CurveError(ErrorKind::zero_torsion,
                       "torsion " + std::to_string(tau[k]) + " at s=" + std::to_string(ss[k]),
                       ss[k]);
    }
    lever[k] = rho_prime[k] / tau[k];
  }
  const auto dlever = differentiate(std::span<const double>(lever), ss[1] - ss[0], 1,
                                    kHighAccuracy);
  SphericalDeviation out;
  out.ss.assign(ss.begin(), ss.end());
  out.sigma.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.sigma[k] = tau[k] * rho[k] + dlever[k];
  return out;
}

namespace {

struct FrenetSeries {
  std::vector<double> ss;
  std::vector<Jet> jets;
  std::vector<FrenetApparatus> frenet;
  std::vector<double> kappa;
  std::vector<double> tau;
  /// d kappa / ds from the third-order jet: <a'', a'''> / kappa in arc length.
  std::vector<double> kappa_prime;
};

FrenetSeries frenet_series(const ArcLengthCurve& curve, int n, const Tolerances& tol) {
  const ArcLengthSamples samples = resample_by_arclength(curve, n, 3, Spacing::endpoints);
  FrenetSeries out;
  out.ss = samples.s;
  out.jets = samples.jets;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    FrenetApparatus fa = frenet_apparatus(samples.jets[k], tol);
    if (fa.is_inflection()) {
      throw CurveError(ErrorKind::inflection, "inflection at s=" + std::to_string(out.ss[k]),
                       out.ss[k]);
    }
    const Jet u = unit_speed_jet(samples.jets[k]);
    out.kappa.push_back(fa.kappa);
    out.tau.push_back(*fa.tau);
    out.kappa_prime.push_back(u.d[2].dot(u.d[3]) / fa.kappa);
    out.frenet.push_back(std::move(fa));
  }
  return out;
}

}  // namespace

SphericalDeviation spherical_deviation(const ArcLengthCurve& curve, int n,
                                       const Tolerances& tol) {
  const FrenetSeries fs = frenet_series(curve, n, tol);
  std::vector<double> rho(fs.kappa.size()), rho_prime(fs.kappa.size());
  for (std::size_t k = 0; k < rho.size(); ++k) {
    rho[k] = 1.0 / fs.kappa[k];
    rho_prime[k] = -fs.kappa_prime[k] * rho[k] * rho[k];
  }
  return spherical_deviation(rho, rho_prime, fs.tau, fs.ss, tol);
}

OsculatingSeries osculating_series(const ArcLengthCurve& curve, int n, const Tolerances& tol) {
  const FrenetSeries fs = frenet_series(curve, n, tol);
  const double h = fs.ss[1] - fs.ss[0];
  const std::vector<double>& kappa_prime = fs.kappa_prime;
  std::vector<double> rho(fs.kappa.size()), rho_prime(fs.kappa.size()),
      lever(fs.kappa.size(), 0.0);
  for (std::size_t k = 0; k < rho.size(); ++k) {
    rho[k] = 1.0 / fs.kappa[k];
    rho_prime[k] = -kappa_prime[k] * rho[k] * rho[k];
  }
  for (std::size_t k = 0; k < rho.size(); ++k) {
    lever[k] = std::abs(fs.tau[k]) > tol.torsion ? rho_prime[k] / fs.tau[k] : 0.0;
  }
  const auto dlever = differentiate(std::span<const double>(lever), h, 1, kHighAccuracy);

  OsculatingSeries out;
  for (std::size_t k = 0; k < fs.ss.size(); ++k) {
    if (!(std::abs(fs.tau[k]) > tol.torsion)) continue;
    const OsculatingSphere sphere =
        osculating_sphere_frenet(fs.jets[k], fs.kappa[k], fs.tau[k], kappa_prime[k], tol);
    out.ss.push_back(fs.ss[k]);
    out.centers.push_back(sphere.center);
    out.radii.push_back(sphere.radius);
    out.sigma.push_back(fs.tau[k] * rho[k] + dlever[k]);
  }
  return out;
}

SphereNormalDerivative sphere_normal_derivative_check(const ArcLengthCurve& curve, double s,
                                                      double h, const Tolerances& tol) {
  const LocalGeometry g = local_geometry(curve, s, h, tol);
  const double R = g.sphere.radius;
  SphereNormalDerivative out;
  const double lever = g.rho_prime / g.tau;
  out.rhs = (g.frame.e1 + (g.rho * lever / (R * R)) * g.sigma * g.frame.e2 +
             (lever * lever / (R * R) - 1.0) * g.sigma * g.frame.e3) /
            R;

  const std::vector<double> nodes = stencil_nodes(s, h, curve.length());
  const auto w = fd_weights(nodes, s, 1);
  out.lhs = Vec3::Zero();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (w[i] == 0.0) continue;
    const LocalGeometry gi = local_geometry(curve, nodes[i], h, tol);
    out.lhs += w[i] * (gi.unit_jet.d[0] - gi.sphere.center) / gi.sphere.radius;
  }
  out.residual = (out.lhs - out.rhs).norm();
  return out;
}

OsculatingProjection osculating_projection(const ArcLengthCurve& curve, double s0,
                                           double halfwidth, int n, const Tolerances& tol) {
  if (n < 5 || n % 2 == 0) {
    throw CurveError(ErrorKind::input, "projection needs an odd sample count >= 5");
  }
  if (!(halfwidth > 0.0)) throw CurveError(ErrorKind::input, "projection halfwidth must be > 0");
  if (s0 - halfwidth < 0.0 || s0 + halfwidth > curve.length()) {
    throw CurveError(ErrorKind::domain, "projection window leaves the curve", s0);
  }
  const LocalGeometry g = local_geometry(curve, s0, std::min(kDefaultStep, halfwidth / 4), tol);
  OsculatingProjection out;
  out.s0 = s0;
  out.center = g.sphere.center;
  out.radius = g.sphere.radius;
  out.spacing = 2.0 * halfwidth / (n - 1);
  const int mid = (n - 1) / 2;
  const Vec3 contact = g.unit_jet.d[0];
  const Vec3 w0 = contact - out.center;
  out.radius = w0.norm();
  for (int k = 0; k < n; ++k) {
    const double s = s0 + (k - mid) * out.spacing;
    const Vec3 alpha = k == mid ? contact : curve.position_at(s);
    const Vec3 delta = alpha - contact;
    const Vec3 offset = delta + w0;
    const double dist = offset.norm();
    if (!(dist > 1e-12 * out.radius)) {
      throw CurveError(ErrorKind::projection_singularity,
                       "curve passes through the osculating center", s);
    }
    // r - |alpha - a0| from r^2 - |alpha - a0|^2 = -(2 <delta, w0> + |delta|^2).
    const double gap = -(2.0 * delta.dot(w0) + delta.squaredNorm()) / (out.radius + dist);
    const Vec3 correction = offset * (gap / dist);
    out.ss.push_back(s);
    out.corrections.push_back(correction);
    out.points.push_back(alpha + correction);
  }
  return out;
}

Theorem3Check theorem3_check(const ArcLengthCurve& curve, double s0, double halfwidth, int n,
                             const Tolerances& tol) {
  if (halfwidth <= 0.0) halfwidth = 0.05 * curve.length();
  const OsculatingProjection proj = osculating_projection(curve, s0, halfwidth, n, tol);
  const LocalGeometry g = local_geometry(curve, s0, kDefaultStep, tol);

  const int mid = (n - 1) / 2;
  const Jet& a = g.unit_jet;
  std::array<Vec3, 4> beta;
  beta[0] = proj.points[mid];
  try {
    for (int order = 1; order <= 3; ++order) {
      const auto d = differentiate(std::span<const Vec3>(proj.corrections), proj.spacing, order);
      beta[order] = a.d[order] + d[mid];
    }
  } catch (const CurveError& e) {
    throw CurveError(ErrorKind::numerical_differentiation, e.what(), s0);
  }

  Theorem3Check out;
  const Vec3 cross_beta = beta[1].cross(beta[2]);
  const double vb = beta[1].norm();
  out.kappa_alpha = g.kappa;
  out.tau_alpha = g.tau;
  out.kappa_beta = cross_beta.norm() / (vb * vb * vb);
  out.tau_beta = beta[1].dot(beta[2].cross(beta[3])) / cross_beta.squaredNorm();
  out.sigma = g.sigma;
  out.radius = g.sphere.radius;

  const Vec3 w = a.d[0] - g.sphere.center;
  out.J = w.dot(a.d[1].cross(a.d[2]));
  out.J_prime_closed_form = w.dot(a.d[1].cross(a.d[3])) - g.kappa * g.sigma;
  const double hj = std::min(kDefaultStep, 0.25 * std::min(s0, curve.length() - s0));
  if (!(hj > 0.0)) throw CurveError(ErrorKind::domain, "J' needs an interior point", s0);
  const auto J_at = [&](double s) {
    const LocalGeometry gs = local_geometry(curve, s, kDefaultStep, tol);
    const Jet& u = gs.unit_jet;
    return (u.d[0] - gs.sphere.center).dot(u.d[1].cross(u.d[2]));
  };
  out.J_prime = central_derivative(std::function<double(double)>(J_at), s0, hj, 1);
  const double q = 1.0 + out.J * out.J;
  out.tau_decomposition_residual =
      std::abs(out.tau_alpha - out.J_prime / q - g.kappa * g.sigma / q);
  for (int k = 0; k <= 3; ++k) {
    out.contact_order_error = std::max(out.contact_order_error, (beta[k] - a.d[k]).norm());
  }
  return out;
}

}  // namespace curveframe
