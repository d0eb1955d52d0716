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

#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "curveframe/curve_io.hpp"
#include "curveframe/error.hpp"
#include "support.hpp"

namespace curveframe {
namespace {

namespace fs = std::filesystem;

std::string parse_error_message(const std::string& text) {
  try {
    parse_curve_spec(text);
  } catch (const CurveError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    return e.what();
  }
  ADD_FAILURE() << "no error for " << text;
  return {};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() /
                       ("curveframe_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
  fs::create_directories(dir);
  return dir;
}

TEST(CurveSpecIO, ParsesHelix) {
  const CurveSpec spec = parse_curve_spec(
      R"({"name": "h", "family": "helix", "params": {"a": 1, "b": 0.5}, "domain": [0, 3]})");
  EXPECT_EQ(spec.name, "h");
  EXPECT_EQ(spec.family(), CurveFamily::helix);
  EXPECT_EQ(std::get<HelixParams>(spec.params).b, 0.5);
  EXPECT_EQ(spec.t1, 3.0);
}

TEST(CurveSpecIO, NameDefaultsToFamily) {
  const CurveSpec spec =
      parse_curve_spec(R"({"family": "circle", "params": {"radius": 2}, "domain": [0, 1]})");
  EXPECT_EQ(spec.name, "circle");
}

TEST(CurveSpecIO, RoundTripsEveryFamily) {
  std::vector<CurveSpec> specs = {testing::circle(1.5, Vec3(1, 2, 3)), make_helix(1.0, 0.5),
                                  testing::wobbly_sphere(), testing::twisted_cubic(-1, 2),
                                  testing::tilted_ellipse()};
  BezierParams bz;
  bz.control_points = {Vec3(0, 0, 0), Vec3(1, 2, 0), Vec3(2, -1, 1), Vec3(3, 0, 0)};
  specs.push_back(testing::spec_of("bz", bz, 0.0, 1.0));
  FourierCurveParams fc;
  fc.series.cos = {Vec3(1, 0, 0)};
  fc.series.sin = {Vec3(0, 1, 0.2)};
  fc.series.linear = Vec3(0, 0, 0.1);
  specs.push_back(testing::spec_of("fc", fc, 0.0, 6.0));
  PolylineParams pl;
  pl.points = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(1, 1, 0), Vec3(1, 1, 1), Vec3(0, 2, 1)};
  specs.push_back(testing::spec_of("pl", pl, 0.0, 1.0));

  for (const CurveSpec& spec : specs) {
    const std::string text = curve_spec_to_json(spec);
    const CurveSpec back = parse_curve_spec(text);
    EXPECT_EQ(curve_spec_to_json(back), text) << spec.name;
    EXPECT_EQ(back.family(), spec.family());
    const Curve a(spec), b(back);
    const double t = a.t0() + 0.37 * (a.t1() - a.t0());
    EXPECT_NEAR((a.position(t) - b.position(t)).norm(), 0.0, 1e-14) << spec.name;
  }
}

TEST(CurveSpecIO, ErrorsNameTheField) {
  EXPECT_NE(parse_error_message(R"({"params": {}})").find("'family'"), std::string::npos);
  EXPECT_NE(parse_error_message(R"({"family": "spiral", "params": {}})").find("spiral"),
            std::string::npos);
  EXPECT_NE(parse_error_message(R"({"family": "helix", "params": {"a": 1}, "domain": [0, 1]})")
                .find("'params.b'"),
            std::string::npos);
  EXPECT_NE(parse_error_message(
                R"({"family": "helix", "params": {"a": "x", "b": 1}, "domain": [0, 1]})")
                .find("'params.a'"),
            std::string::npos);
  EXPECT_NE(parse_error_message(R"({"family": "helix", "params": {"a": 1, "b": 1}, "domain": [1, 0]})")
                .find("'domain'"),
            std::string::npos);
  EXPECT_NE(parse_error_message(
                R"({"family": "polynomial", "params": {"coefficients": [[0, 0], [1, 0, 0]]}, "domain": [0, 1]})")
                .find("'params.coefficients[0]'"),
            std::string::npos);
  EXPECT_NE(parse_error_message(R"({"family": "helix", "params": {"a": 1, "b": 1}, "domain": [0, 1],
            "motion": {"rotation": [[2, 0, 0], [0, 1, 0], [0, 0, 1]]}})")
                .find("'motion.rotation'"),
            std::string::npos);
  parse_error_message("{not json");
}

TEST(CurveSpecIO, ReadsExampleFiles) {
  const fs::path dir = scratch_dir();
  write_file_atomic(dir / "c.json",
                    R"({"family": "circle", "params": {"radius": 2}, "domain": [0, 6.283185307179586]})");
  const CurveSpec spec = read_curve_spec(dir / "c.json");
  EXPECT_EQ(std::get<CircleParams>(spec.params).radius, 2.0);
  EXPECT_THROW(read_curve_spec(dir / "missing.json"), CurveError);
  fs::remove_all(dir);
}

TEST(PolylineCsv, WithAndWithoutHeader) {
  const auto plain = parse_polyline_csv("0,0,0\n1, 2, 3\n\n-1.5,2e-3,4\n");
  ASSERT_EQ(plain.size(), 3u);
  EXPECT_EQ(plain[1], Vec3(1, 2, 3));
  EXPECT_EQ(plain[2], Vec3(-1.5, 2e-3, 4));
  const auto headed = parse_polyline_csv("x,y,z\r\n0,0,0\r\n1,2,3\r\n");
  ASSERT_EQ(headed.size(), 2u);
  EXPECT_EQ(headed[1], Vec3(1, 2, 3));
}

TEST(PolylineCsv, RejectsMalformedRows) {
  try {
    parse_polyline_csv("0,0,0\n1,2\n");
    FAIL();
  } catch (const CurveError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_polyline_csv("0,0,0,0\n"), CurveError);
  EXPECT_THROW(parse_polyline_csv("0,0,zero\n"), CurveError);
}

TEST(PolylineCsv, SpecReferencesCsvRelativeToSpec) {
  const fs::path dir = scratch_dir();
  write_file_atomic(dir / "pts.csv", "x,y,z\n0,0,0\n1,0,0\n1,1,0\n0,1,0\n0,1,1\n");
  write_file_atomic(dir / "poly.json", R"({"family": "polyline", "params": {"csv": "pts.csv"}})");
  const CurveSpec spec = read_curve_spec(dir / "poly.json");
  ASSERT_EQ(std::get<PolylineParams>(spec.params).points.size(), 5u);
  fs::remove_all(dir);
}

TEST(AtomicWrite, ReplacesContentsWithoutLeftovers) {
  const fs::path dir = scratch_dir();
  const fs::path file = dir / "out.txt";
  write_file_atomic(file, "first");
  write_file_atomic(file, "second\n");
  EXPECT_EQ(read_text_file(file), "second\n");
  int entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
  EXPECT_EQ(entries, 1);
  EXPECT_THROW(write_file_atomic(dir / "no" / "such" / "dir.txt", "x"), CurveError);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace curveframe
