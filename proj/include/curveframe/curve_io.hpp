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

// Curve spec documents (JSON) and polyline samples (CSV).
//
// {"name": "h", "family": "helix", "params": {"a": 1, "b": 1},
//  "domain": [0, 6.283185307179586],
//  "motion": {"rotation": [[1,0,0],[0,1,0],[0,0,1]], "translation": [0,0,0]}}
//
// Polyline params accept either "points": [[x,y,z], ...] or "csv": "file.csv"
// (resolved against the directory of the JSON file). Polyline domains are ignored.

#include <filesystem>
#include <string>
#include <vector>

#include "curveframe/curve.hpp"

namespace curveframe {

/// Throws CurveError(parse) naming the offending line or field.
CurveSpec parse_curve_spec(const std::string& text,
                           const std::filesystem::path& base_dir = {});
CurveSpec read_curve_spec(const std::filesystem::path& path);

/// Inverse of parse_curve_spec for every family (polylines inline their points).
std::string curve_spec_to_json(const CurveSpec& spec);

/// Rows of x,y,z; a first line that is not numeric is taken as a header.
std::vector<Vec3> parse_polyline_csv(const std::string& text);
std::vector<Vec3> read_polyline_csv(const std::filesystem::path& path);

/// Reads a whole file; throws CurveError(input) when unreadable.
std::string read_text_file(const std::filesystem::path& path);

/// Writes to a sibling temporary and renames over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace curveframe
