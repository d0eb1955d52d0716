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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace curveframe {

enum class ErrorKind {
  regularity,
  domain,
  inflection,
  zero_torsion,
  degenerate_fit,
  degenerate_step,
  sphericality,
  insufficient_data,
  input,
  projection_singularity,
  numerical_differentiation,
  parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` identifies the failed
/// precondition; `arclength()` is set when the failure has a location on the curve.
class CurveError : public std::runtime_error {
 public:
  CurveError(ErrorKind kind, const std::string& message,
             std::optional<double> arclength = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + " error: " + message),
        kind_(kind),
        arclength_(arclength) {}

  ErrorKind kind() const { return kind_; }
  std::optional<double> arclength() const { return arclength_; }

 private:
  ErrorKind kind_;
  std::optional<double> arclength_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::regularity: return "regularity";
    case ErrorKind::domain: return "domain";
    case ErrorKind::inflection: return "inflection";
    case ErrorKind::zero_torsion: return "zero-torsion";
    case ErrorKind::degenerate_fit: return "degenerate-fit";
    case ErrorKind::degenerate_step: return "degenerate-step";
    case ErrorKind::sphericality: return "sphericality";
    case ErrorKind::insufficient_data: return "insufficient-data";
    case ErrorKind::input: return "input";
    case ErrorKind::projection_singularity: return "projection-singularity";
    case ErrorKind::numerical_differentiation: return "numerical-differentiation";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

}  // namespace curveframe
