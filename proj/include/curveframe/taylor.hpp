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

// Truncated Taylor series arithmetic. A series stores normalized coefficients
// c[k] = f^(k)(t0) / k!, so derivatives of compositions come out exactly
// (up to rounding) without symbolic differentiation.

#include <array>
#include <cassert>
#include <cmath>

#include "curveframe/vec.hpp"

namespace curveframe {

template <int N, typename T = double>
struct Taylor {
  std::array<T, N + 1> c;

  Taylor() { c.fill(zero()); }

  static T zero() {
    if constexpr (std::is_same_v<T, double>) {
      return 0.0;
    } else {
      return T::Zero();
    }
  }

  static Taylor constant(const T& value) {
    Taylor out;
    out.c[0] = value;
    return out;
  }

  /// The identity series t0 + h.
  static Taylor variable(double at) requires std::is_same_v<T, double> {
    Taylor out;
    out.c[0] = at;
    if constexpr (N >= 1) out.c[1] = 1.0;
    return out;
  }

  /// Builds the series from derivative values f(t0), f'(t0), ...
  template <typename Range>
  static Taylor from_derivatives(const Range& derivs) {
    Taylor out;
    double factorial = 1.0;
    for (int k = 0; k <= N; ++k) {
      if (k > 0) factorial *= k;
      out.c[k] = derivs[k] / factorial;
    }
    return out;
  }

  T derivative(int k) const {
    double factorial = 1.0;
    for (int i = 2; i <= k; ++i) factorial *= i;
    return c[k] * factorial;
  }

  Taylor& operator+=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c[k] += o.c[k];
    return *this;
  }
  Taylor& operator-=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c[k] -= o.c[k];
    return *this;
  }
  Taylor& operator*=(double s) {
    for (int k = 0; k <= N; ++k) c[k] *= s;
    return *this;
  }

  friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend Taylor operator*(Taylor a, double s) { return a *= s; }
  friend Taylor operator*(double s, Taylor a) { return a *= s; }
  friend Taylor operator-(Taylor a) { return a *= -1.0; }
  friend Taylor operator+(Taylor a, double s) requires std::is_same_v<T, double> {
    a.c[0] += s;
    return a;
  }
};

using Series = Taylor<4>;
using VecSeries = Taylor<4, Vec3>;

template <int N>
Taylor<N> operator*(const Taylor<N>& a, const Taylor<N>& b) {
  Taylor<N> out;
  for (int k = 0; k <= N; ++k) {
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) acc += a.c[j] * b.c[k - j];
    out.c[k] = acc;
  }
  return out;
}

/// Scalar series times vector series.
template <int N>
Taylor<N, Vec3> operator*(const Taylor<N>& a, const Taylor<N, Vec3>& b) {
  Taylor<N, Vec3> out;
  for (int k = 0; k <= N; ++k) {
    Vec3 acc = Vec3::Zero();
    for (int j = 0; j <= k; ++j) acc += a.c[j] * b.c[k - j];
    out.c[k] = acc;
  }
  return out;
}

template <int N>
Taylor<N> dot(const Taylor<N, Vec3>& a, const Taylor<N, Vec3>& b) {
  Taylor<N> out;
  for (int k = 0; k <= N; ++k) {
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) acc += a.c[j].dot(b.c[k - j]);
    out.c[k] = acc;
  }
  return out;
}

template <int N>
Taylor<N> operator/(const Taylor<N>& a, const Taylor<N>& b) {
  assert(b.c[0] != 0.0);
  Taylor<N> q;
  for (int k = 0; k <= N; ++k) {
    double acc = a.c[k];
    for (int j = 1; j <= k; ++j) acc -= b.c[j] * q.c[k - j];
    q.c[k] = acc / b.c[0];
  }
  return q;
}

template <int N>
Taylor<N> sqrt(const Taylor<N>& x) {
  assert(x.c[0] > 0.0);
  Taylor<N> y;
  y.c[0] = std::sqrt(x.c[0]);
  for (int k = 1; k <= N; ++k) {
    double acc = x.c[k];
    for (int j = 1; j < k; ++j) acc -= y.c[j] * y.c[k - j];
    y.c[k] = acc / (2.0 * y.c[0]);
  }
  return y;
}

template <int N>
struct SinCos {
  Taylor<N> sin;
  Taylor<N> cos;
};

template <int N>
SinCos<N> sincos(const Taylor<N>& u) {
  SinCos<N> out;
  out.sin.c[0] = std::sin(u.c[0]);
  out.cos.c[0] = std::cos(u.c[0]);
  for (int k = 1; k <= N; ++k) {
    double s = 0.0;
    double c = 0.0;
    for (int j = 1; j <= k; ++j) {
      s += j * u.c[j] * out.cos.c[k - j];
      c -= j * u.c[j] * out.sin.c[k - j];
    }
    out.sin.c[k] = s / k;
    out.cos.c[k] = c / k;
  }
  return out;
}

/// Antiderivative with zero constant term; the top coefficient of the
/// integrand is dropped.
template <int N>
Taylor<N> integrate(const Taylor<N>& f) {
  Taylor<N> out;
  for (int k = 1; k <= N; ++k) out.c[k] = f.c[k - 1] / k;
  return out;
}

/// outer(inner(h)) where inner has zero constant term.
template <int N, typename T>
Taylor<N, T> compose(const Taylor<N, T>& outer, const Taylor<N>& inner) {
  assert(inner.c[0] == 0.0);
  Taylor<N, T> out = Taylor<N, T>::constant(outer.c[0]);
  Taylor<N> power = Taylor<N>::constant(1.0);
  for (int k = 1; k <= N; ++k) {
    power = power * inner;
    for (int m = k; m <= N; ++m) out.c[m] += power.c[m] * outer.c[k];
  }
  return out;
}

/// Compositional inverse of a series with zero constant and nonzero linear term.
template <int N>
Taylor<N> revert(const Taylor<N>& g) {
  assert(g.c[0] == 0.0 && g.c[1] != 0.0);
  Taylor<N> h;
  h.c[1] = 1.0 / g.c[1];
  for (int k = 2; k <= N; ++k) {
    const Taylor<N> partial = compose(g, h);
    h.c[k] = -partial.c[k] / g.c[1];
  }
  return h;
}

}  // namespace curveframe
