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

#include "curveframe/curve_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "curveframe/error.hpp"

namespace curveframe {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw CurveError(ErrorKind::parse, "field '" + field + "': " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

double number_or(const json& obj, const std::string& key, double fallback,
                 const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  return number(*it, path + "." + key);
}

Vec3 vec3(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected [x, y, z]");
  return Vec3(number(j[0], path + "[0]"), number(j[1], path + "[1]"), number(j[2], path + "[2]"));
}

Vec3 vec3_or(const json& obj, const std::string& key, const Vec3& fallback,
             const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  return vec3(*it, path + "." + key);
}

std::vector<double> numbers(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Vec3> vec3s(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of [x, y, z]");
  std::vector<Vec3> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(vec3(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

FourierSeries fourier(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  FourierSeries f;
  f.constant = number_or(j, "constant", 0.0, path);
  f.linear = number_or(j, "linear", 0.0, path);
  f.omega = number_or(j, "omega", 1.0, path);
  if (j.contains("cos")) f.cos = numbers(j["cos"], path + ".cos");
  if (j.contains("sin")) f.sin = numbers(j["sin"], path + ".sin");
  return f;
}

json to_json(const FourierSeries& f) {
  return json{{"constant", f.constant}, {"linear", f.linear}, {"omega", f.omega},
              {"cos", f.cos}, {"sin", f.sin}};
}

json to_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

json to_json(const std::vector<Vec3>& vs) {
  json out = json::array();
  for (const Vec3& v : vs) out.push_back(to_json(v));
  return out;
}

CurveParams parse_params(CurveFamily family, const json& p, const std::filesystem::path& base) {
  const std::string path = "params";
  switch (family) {
    case CurveFamily::circle: {
      CircleParams c;
      c.center = vec3_or(p, "center", c.center, path);
      c.radius = number(member(p, "radius", path), path + ".radius");
      c.omega = number_or(p, "omega", c.omega, path);
      c.phase = number_or(p, "phase", c.phase, path);
      c.u = vec3_or(p, "u", c.u, path);
      c.v = vec3_or(p, "v", c.v, path);
      return c;
    }
    case CurveFamily::helix:
      return HelixParams{number(member(p, "a", path), path + ".a"),
                         number(member(p, "b", path), path + ".b")};
    case CurveFamily::ellipse: {
      EllipseParams e;
      e.center = vec3_or(p, "center", e.center, path);
      e.semi_a = number(member(p, "a", path), path + ".a");
      e.semi_b = number(member(p, "b", path), path + ".b");
      e.u = vec3_or(p, "u", e.u, path);
      e.v = vec3_or(p, "v", e.v, path);
      return e;
    }
    case CurveFamily::spherical_fourier: {
      SphericalFourierParams s;
      s.center = vec3_or(p, "center", s.center, path);
      s.radius = number(member(p, "radius", path), path + ".radius");
      s.polar = fourier(member(p, "polar", path), path + ".polar");
      s.azimuth = fourier(member(p, "azimuth", path), path + ".azimuth");
      return s;
    }
    case CurveFamily::polynomial:
      return PolynomialParams{vec3s(member(p, "coefficients", path), path + ".coefficients")};
    case CurveFamily::bezier:
      return BezierParams{vec3s(member(p, "control_points", path), path + ".control_points")};
    case CurveFamily::polyline: {
      if (p.is_object() && p.contains("csv")) {
        const json& file = p["csv"];
        if (!file.is_string()) fail(path + ".csv", "expected a file name");
        std::filesystem::path csv = file.get<std::string>();
        if (csv.is_relative()) csv = base / csv;
        return PolylineParams{read_polyline_csv(csv)};
      }
      return PolylineParams{vec3s(member(p, "points", path), path + ".points")};
    }
    case CurveFamily::fourier: {
      FourierCurveParams f;
      f.series.constant = vec3_or(p, "constant", f.series.constant, path);
      f.series.linear = vec3_or(p, "linear", f.series.linear, path);
      f.series.omega = number_or(p, "omega", 1.0, path);
      if (p.contains("cos")) f.series.cos = vec3s(p["cos"], path + ".cos");
      if (p.contains("sin")) f.series.sin = vec3s(p["sin"], path + ".sin");
      return f;
    }
  }
  fail("family", "unsupported");
}

CurveFamily parse_family(const json& j) {
  if (!j.is_string()) fail("family", "expected a string");
  const std::string name = j.get<std::string>();
  for (CurveFamily f : {CurveFamily::circle, CurveFamily::helix, CurveFamily::spherical_fourier,
                        CurveFamily::polynomial, CurveFamily::bezier, CurveFamily::polyline,
                        CurveFamily::ellipse, CurveFamily::fourier}) {
    if (to_string(f) == name) return f;
  }
  fail("family", "unknown family '" + name + "'");
}

RigidMotion parse_motion(const json& j) {
  if (!j.is_object()) fail("motion", "expected an object");
  RigidMotion m;
  if (j.contains("rotation")) {
    const json& r = j["rotation"];
    if (!r.is_array() || r.size() != 3) fail("motion.rotation", "expected a 3x3 row array");
    for (int i = 0; i < 3; ++i)
      m.rotation.row(i) = vec3(r[i], "motion.rotation[" + std::to_string(i) + "]").transpose();
    const double err = (m.rotation.transpose() * m.rotation -
                        Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    if (err > 1e-9 || m.rotation.determinant() < 0.0)
      fail("motion.rotation", "not a proper rotation");
  }
  m.translation = vec3_or(j, "translation", m.translation, "motion");
  return m;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CurveError(ErrorKind::input, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CurveError(ErrorKind::input, "cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) throw CurveError(ErrorKind::input, "write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw CurveError(ErrorKind::input, "cannot rename onto '" + path.string() + "'");
  }
}

CurveSpec parse_curve_spec(const std::string& text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CurveError(ErrorKind::parse, e.what());
  }
  if (!doc.is_object()) fail("<root>", "expected an object");
  CurveSpec spec;
  const CurveFamily family = parse_family(member(doc, "family", ""));
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("name", "expected a string");
    spec.name = doc["name"].get<std::string>();
  } else {
    spec.name = to_string(family);
  }
  spec.params = parse_params(family, member(doc, "params", ""), base_dir);
  if (family != CurveFamily::polyline) {
    const json& d = member(doc, "domain", "");
    if (!d.is_array() || d.size() != 2) fail("domain", "expected [t0, t1]");
    spec.t0 = number(d[0], "domain[0]");
    spec.t1 = number(d[1], "domain[1]");
    if (!(spec.t1 > spec.t0)) fail("domain", "t1 must exceed t0");
  }
  if (doc.contains("motion")) spec.motion = parse_motion(doc["motion"]);
  if (doc.contains("regularity_eps"))
    spec.regularity_eps = number(doc["regularity_eps"], "regularity_eps");
  return spec;
}

CurveSpec read_curve_spec(const std::filesystem::path& path) {
  return parse_curve_spec(read_text_file(path), path.parent_path());
}

std::string curve_spec_to_json(const CurveSpec& spec) {
  json doc;
  doc["name"] = spec.name;
  doc["family"] = to_string(spec.family());
  json p = json::object();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CircleParams>) {
          p = {{"center", to_json(v.center)}, {"radius", v.radius}, {"omega", v.omega},
               {"phase", v.phase}, {"u", to_json(v.u)}, {"v", to_json(v.v)}};
        } else if constexpr (std::is_same_v<T, HelixParams>) {
          p = {{"a", v.a}, {"b", v.b}};
        } else if constexpr (std::is_same_v<T, EllipseParams>) {
          p = {{"center", to_json(v.center)}, {"a", v.semi_a}, {"b", v.semi_b},
               {"u", to_json(v.u)}, {"v", to_json(v.v)}};
        } else if constexpr (std::is_same_v<T, SphericalFourierParams>) {
          p = {{"center", to_json(v.center)}, {"radius", v.radius},
               {"polar", to_json(v.polar)}, {"azimuth", to_json(v.azimuth)}};
        } else if constexpr (std::is_same_v<T, PolynomialParams>) {
          p = {{"coefficients", to_json(v.coefficients)}};
        } else if constexpr (std::is_same_v<T, BezierParams>) {
          p = {{"control_points", to_json(v.control_points)}};
        } else if constexpr (std::is_same_v<T, PolylineParams>) {
          p = {{"points", to_json(v.points)}};
        } else {
          p = {{"constant", to_json(v.series.constant)}, {"linear", to_json(v.series.linear)},
               {"omega", v.series.omega}, {"cos", to_json(v.series.cos)},
               {"sin", to_json(v.series.sin)}};
        }
      },
      spec.params);
  doc["params"] = p;
  doc["domain"] = json::array({spec.t0, spec.t1});
  if (!spec.motion.is_identity()) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) rows.push_back(to_json(Vec3(spec.motion.rotation.row(i))));
    doc["motion"] = {{"rotation", rows}, {"translation", to_json(spec.motion.translation)}};
  }
  doc["regularity_eps"] = spec.regularity_eps;
  return doc.dump(2) + "\n";
}

std::vector<Vec3> parse_polyline_csv(const std::string& text) {
  std::vector<Vec3> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    double xyz[3];
    int count = 0;
    bool ok = true;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t end = line.find(',', pos);
      if (end == std::string::npos) end = line.size();
      std::string cell = line.substr(pos, end - pos);
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      cell = b == std::string::npos ? std::string() : cell.substr(b, e - b + 1);
      double value = 0.0;
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (count >= 3 || res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        ok = false;
        break;
      }
      xyz[count++] = value;
      pos = end + 1;
    }
    if (ok && count == 3) {
      out.emplace_back(xyz[0], xyz[1], xyz[2]);
    } else if (out.empty() && line_no == 1 && line.find_first_of("0123456789") == std::string::npos) {
      continue;
    } else {
      throw CurveError(ErrorKind::parse,
                       "line " + std::to_string(line_no) + ": expected three numbers x,y,z");
    }
  }
  return out;
}

std::vector<Vec3> read_polyline_csv(const std::filesystem::path& path) {
  return parse_polyline_csv(read_text_file(path));
}

}  // namespace curveframe
