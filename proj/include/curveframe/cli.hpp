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

// Command implementations behind the curveframe executable. Each command is
// split into a pure function producing the artifact and the thin CLI layer.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "curveframe/curve.hpp"
#include "curveframe/frames.hpp"
#include "curveframe/osculating.hpp"
#include "curveframe/sweep.hpp"
#include "curveframe/tolerances.hpp"

namespace curveframe::cli {

using Json = nlohmann::ordered_json;

struct CommonOptions {
  int grid = 4096;
  double tol_scale = 1.0;
  std::uint64_t seed = 42;

  Tolerances tolerances() const { return default_tolerances().scaled(tol_scale); }
};

// Deterministic number formatting shared by every text artifact.
std::string format_number(double value);

// frames ---------------------------------------------------------------------

enum class FrameMethod { frenet, rmf_quadrature, rmf_double_reflection, rmf_spherical };

FrameMethod parse_frame_method(const std::string& name);
FrameField compute_frames(const ArcLengthCurve& curve, FrameMethod method, int samples,
                          const Tolerances& tol);
/// Header s,tx,ty,tz,n1x,...,k1,k2 (rm) or s,tx,ty,tz,nx,...,kappa,tau (frenet).
std::string frames_csv(const FrameField& field);
/// Header s,cx,cy,cz,R,sigma.
std::string osculating_csv(const OsculatingSeries& series);

// analyze --------------------------------------------------------------------

struct AnalysisOutcome {
  Json report;
  bool checks_passed = true;
  bool errors_raised = false;
  std::string summary;
};

AnalysisOutcome analyze_curve(const CurveSpec& spec, const CommonOptions& options);

// devplot --------------------------------------------------------------------

/// Self-contained 800x800 SVG of the normal development, the fitted line,
/// the origin and the annotations d and 1/d.
std::string devplot_svg(const ArcLengthCurve& curve, int samples, const Tolerances& tol);

// sweep ----------------------------------------------------------------------

struct SweepOutcome {
  TubeMesh mesh;
  double twist = 0.0;
  double min_osculating_radius = 0.0;
  bool radius_warning = false;
};

SweepOutcome sweep_curve(const ArcLengthCurve& curve, double radius, bool rm, int samples,
                         int segments, const Tolerances& tol);

// verify ---------------------------------------------------------------------

struct CheckRow {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  /// true: pass when measured < tolerance; false: pass when measured > tolerance.
  bool upper_bound = true;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 42;
  int samples = 4096;
  double tol_scale = 1.0;
  unsigned threads = 0;  // 0: hardware concurrency
};

std::vector<CheckRow> run_verify(const VerifyOptions& options);
std::string verify_table(const std::vector<CheckRow>& rows, const VerifyOptions& options);
Json verify_json(const std::vector<CheckRow>& rows, const VerifyOptions& options);

// entry point ----------------------------------------------------------------

int run(int argc, char** argv);

}  // namespace curveframe::cli
