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

#include "curveframe/suites.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace curveframe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

FourierSeries random_series(Rng& rng, double constant, double linear, double amplitude) {
  FourierSeries f;
  f.constant = constant;
  f.linear = linear;
  for (int m = 1; m <= 3; ++m) {
    f.cos.push_back(rng.uniform(-amplitude / m, amplitude / m));
    f.sin.push_back(rng.uniform(-amplitude / m, amplitude / m));
  }
  return f;
}

RigidMotion random_motion(Rng& rng) {
  RigidMotion m;
  m.rotation = rng.rotation();
  m.translation = rng.uniform_vec(-2.0, 2.0);
  return m;
}

}  // namespace

Eigen::Matrix3d Rng::rotation() {
  Eigen::Vector4d q;
  do {
    q = Eigen::Vector4d(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
  } while (q.squaredNorm() > 1.0 || q.squaredNorm() < 1e-4);
  q.normalize();
  return Eigen::Quaterniond(q(0), q(1), q(2), q(3)).toRotationMatrix();
}

CurveSpec make_helix(double a, double b, double turns) {
  CurveSpec spec;
  spec.name = "helix";
  spec.params = HelixParams{a, b};
  spec.t0 = 0.0;
  spec.t1 = kTwoPi * turns;
  return spec;
}

CurveSpec make_circle(double r) {
  CurveSpec spec;
  spec.name = "circle";
  CircleParams c;
  c.radius = r;
  spec.params = c;
  spec.t0 = 0.0;
  spec.t1 = kTwoPi;
  return spec;
}

std::vector<CurveSpec> spherical_suite(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<CurveSpec> out;
  for (int i = 0; i < count; ++i) {
    SphericalFourierParams p;
    p.radius = rng.uniform(0.5, 5.0);
    p.center = rng.uniform_vec(-2.0, 2.0);
    const double polar0 = rng.uniform(1.0, std::numbers::pi - 1.0);
    p.polar = random_series(rng, polar0, 0.0, 0.3);
    p.azimuth = random_series(rng, rng.uniform(0.0, kTwoPi), 1.0, 0.12);
    CurveSpec spec;
    spec.name = "spherical-" + std::to_string(i);
    spec.params = p;
    spec.t0 = 0.0;
    spec.t1 = kTwoPi;
    out.push_back(spec);
  }
  return out;
}

std::vector<CurveSpec> twisted_suite(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<CurveSpec> out;
  for (int i = 0; i < count; ++i) {
    CurveSpec spec;
    if (i % 2 == 0) {
      const double a = rng.uniform(0.5, 2.0);
      const double b = rng.uniform(0.2, 1.0);
      spec = make_helix(a, b, rng.uniform(1.0, 2.0));
      spec.name = "helix-" + std::to_string(i);
    } else {
      // Independent c1, c2, c3 make the torsion det(c1, 2c2, 6c3)/|a' x a''|^2 one-signed.
      PolynomialParams poly;
      Eigen::Matrix3d basis;
      do {
        for (int c = 0; c < 3; ++c) basis.col(c) = rng.uniform_vec(-1.0, 1.0);
      } while (std::abs(basis.determinant()) < 0.3);
      poly.coefficients = {Vec3::Zero(), basis.col(0), basis.col(1), basis.col(2)};
      spec.params = poly;
      spec.name = "cubic-" + std::to_string(i);
      spec.t0 = -1.0;
      spec.t1 = 1.0;
    }
    spec.motion = random_motion(rng);
    out.push_back(spec);
  }
  return out;
}

std::vector<CurveSpec> plane_suite(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<CurveSpec> out;
  for (int i = 0; i < count; ++i) {
    CurveSpec spec;
    switch (i % 3) {
      case 0: {
        EllipseParams e;
        e.semi_a = rng.uniform(1.0, 2.5);
        e.semi_b = rng.uniform(0.6, 1.0);
        spec.params = e;
        spec.name = "ellipse-" + std::to_string(i);
        spec.t0 = rng.uniform(0.0, kTwoPi);
        spec.t1 = spec.t0 + kTwoPi;
        break;
      }
      case 1: {
        PolynomialParams poly;
        poly.coefficients = {Vec3::Zero(), Vec3(1.0, 0.0, 0.0),
                             Vec3(0.0, rng.uniform(0.3, 1.5), 0.0)};
        spec.params = poly;
        spec.name = "parabola-" + std::to_string(i);
        spec.t0 = -1.0;
        spec.t1 = 1.0;
        break;
      }
      default: {
        FourierCurveParams f;
        f.series.cos = {Vec3(rng.uniform(1.0, 2.0), 0.0, 0.0)};
        f.series.sin = {Vec3(0.0, rng.uniform(1.0, 2.0), 0.0)};
        for (int m = 2; m <= 3; ++m) {
          const double amp = 0.1 / (m * m);
          f.series.cos.push_back(Vec3(rng.uniform(-amp, amp), rng.uniform(-amp, amp), 0.0));
          f.series.sin.push_back(Vec3(rng.uniform(-amp, amp), rng.uniform(-amp, amp), 0.0));
        }
        spec.params = f;
        spec.name = "fourier-plane-" + std::to_string(i);
        spec.t0 = 0.0;
        spec.t1 = kTwoPi;
        break;
      }
    }
    spec.motion = random_motion(rng);
    out.push_back(spec);
  }
  return out;
}

}  // namespace curveframe
