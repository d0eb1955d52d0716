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

#include "curveframe/stencil.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "curveframe/error.hpp"

namespace curveframe {

std::vector<double> fd_weights(std::span<const double> nodes, double x0, int order) {
  // Fornberg, "Generation of finite difference formulas on arbitrarily spaced grids".
  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<double>> c(n, std::vector<double>(order + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = c[i][order];
  return out;
}

int central_width(int order, int accuracy) {
  return 2 * ((order + 1) / 2) - 1 + accuracy;
}

namespace {

struct Stencil {
  int start = 0;
  std::vector<double> weights;
};

// Integer-offset stencils are shared by every node with the same window shape.
class StencilCache {
 public:
  StencilCache(int count, int order, int accuracy) : count_(count), order_(order) {
    if (order < 1 || order > 3) {
      throw CurveError(ErrorKind::numerical_differentiation, "derivative order must be 1..3");
    }
    if (accuracy < 2 || accuracy % 2 != 0) {
      throw CurveError(ErrorKind::numerical_differentiation,
                       "accuracy order must be even and at least 2");
    }
    const int width = central_width(order, accuracy);
    const int wide = order + accuracy;
    if (count < wide) {
      throw CurveError(ErrorKind::numerical_differentiation,
                       "need at least " + std::to_string(wide) + " samples");
    }
    half_ = width / 2;
    central_ = make(-half_, width, 0.0);
    for (int i = 0; i < half_; ++i) {
      head_.push_back(make(-i, wide, 0.0));
      tail_.push_back(make(-(wide - 1 - i), wide, 0.0));
    }
  }

  const Stencil& at(int i) const {
    if (i < half_) return head_[i];
    if (i >= count_ - half_) return tail_[count_ - 1 - i];
    return central_;
  }

 private:
  Stencil make(int first_offset, int width, double x0) const {
    std::vector<double> nodes(width);
    for (int k = 0; k < width; ++k) nodes[k] = first_offset + k;
    return Stencil{first_offset, fd_weights(nodes, x0, order_)};
  }

  int count_;
  int order_;
  int half_ = 2;
  Stencil central_;
  std::vector<Stencil> head_;
  std::vector<Stencil> tail_;
};

template <typename T>
std::vector<T> differentiate_impl(std::span<const T> values, double h, int order,
                                  int accuracy, T zero) {
  const int n = static_cast<int>(values.size());
  const StencilCache cache(n, order, accuracy);
  const double scale = 1.0 / std::pow(h, order);
  std::vector<T> out(n, zero);
  for (int i = 0; i < n; ++i) {
    const Stencil& st = cache.at(i);
    T acc = zero;
    for (std::size_t k = 0; k < st.weights.size(); ++k) {
      acc += st.weights[k] * values[i + st.start + static_cast<int>(k)];
    }
    out[i] = acc * scale;
  }
  return out;
}

template <typename T>
T central_impl(const std::function<T(double)>& f, double x, double h, int order, T zero) {
  if (order < 1 || order > 3) {
    throw CurveError(ErrorKind::numerical_differentiation, "derivative order must be 1..3");
  }
  const int half = central_width(order, 4) / 2;
  std::vector<double> nodes;
  for (int k = -half; k <= half; ++k) nodes.push_back(k);
  const auto w = fd_weights(nodes, 0.0, order);
  T acc = zero;
  for (int k = -half; k <= half; ++k) {
    if (w[k + half] != 0.0) acc += w[k + half] * f(x + k * h);
  }
  return acc / std::pow(h, order);
}

}  // namespace

std::vector<double> differentiate(std::span<const double> values, double h, int order,
                                  int accuracy) {
  return differentiate_impl<double>(values, h, order, accuracy, 0.0);
}

std::vector<Vec3> differentiate(std::span<const Vec3> values, double h, int order,
                                int accuracy) {
  return differentiate_impl<Vec3>(values, h, order, accuracy, Vec3::Zero());
}

double central_derivative(const std::function<double(double)>& f, double x, double h,
                          int order) {
  return central_impl<double>(f, x, h, order, 0.0);
}

Vec3 central_derivative(const std::function<Vec3(double)>& f, double x, double h, int order) {
  return central_impl<Vec3>(f, x, h, order, Vec3::Zero());
}

}  // namespace curveframe
