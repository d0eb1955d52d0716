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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curveframe/cli.hpp"
#include "curveframe/curve_io.hpp"

namespace {

using curveframe::cli::Json;
namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string table;
  std::string json;
};

Run run_verify_all(const fs::path& json_path) {
  std::vector<std::string> args = {"curveframe", "--seed", "42", "verify", "--suite", "all",
                                   "--out", json_path.string()};
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  std::ostringstream out;
  auto* old = std::cout.rdbuf(out.rdbuf());
  Run r;
  r.code = curveframe::cli::run(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old);
  r.table = out.str();
  r.json = curveframe::read_text_file(json_path);
  return r;
}

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> checks;  // "suite/check"
};

}  // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / "curveframe_acceptance";
  fs::create_directories(dir);
  const Run first = run_verify_all(dir / "first.json");
  const Run second = run_verify_all(dir / "second.json");
  fs::remove_all(dir);

  std::map<std::string, Json> rows;
  const Json report = Json::parse(first.json);
  for (const Json& row : report["checks"]) {
    rows[row["suite"].get<std::string>() + "/" + row["check"].get<std::string>()] = row;
  }

  const std::vector<Criterion> criteria = {
      {1, "sphericality test on 20 random spherical curves",
       {"spherical/thm1.spherical_verdicts_missed", "spherical/thm1.line_residual_rel",
        "spherical/thm1.radius_rel_error", "spherical/errors.raised"}},
      {2, "kappa, tau and delta theta from spherical curvature J",
       {"spherical/thm2.kappa_rel", "spherical/thm2.tau_rel",
        "spherical/thm2.delta_theta_vs_arctan_J"}},
      {3, "exact spherical RM frame",
       {"spherical/sph_rmf.k1_plus_inverse_r", "spherical/sph_rmf.rm_defect",
        "spherical/sph_rmf.gauge_spread_vs_quadrature"}},
      {4, "osculating sphere contact and Frenet/RM agreement",
       {"osculating/contact.max_g_derivatives", "osculating/contact.frenet_vs_rm_center_rel",
        "osculating/errors.raised"}},
      {5, "sphere normal derivative and sigma",
       {"osculating/prop1.sphere_normal_derivative", "osculating/prop1.max_sigma_spherical",
        "osculating/prop1.derivative_is_t_over_R"}},
      {6, "projection onto osculating spheres",
       {"osculating/thm3.kappa_alpha_vs_beta", "osculating/thm3.tau_alpha_vs_beta",
        "osculating/thm3.tau_decomposition", "osculating/helix.kappa_tau_J_sigma"}},
      {7, "RM-plane characterization of plane curves",
       {"planar/thm4.planar_verdicts_missed", "planar/thm4.planar_system_residual",
        "planar/thm4.not_planar_verdicts_missed", "planar/thm4.min_certificate_all_gauges",
        "planar/errors.raised"}},
      {8, "double reflection vs quadrature RM frames",
       {"planar/rm.double_reflection_vs_quadrature", "planar/rm.halving_not_monotone"}},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    bool pass = true;
    std::ostringstream detail;
    for (const std::string& key : c.checks) {
      const auto it = rows.find(key);
      if (it == rows.end()) {
        pass = false;
        detail << ' ' << key << "=missing";
        continue;
      }
      const Json& row = it->second;
      pass = pass && row["pass"].get<bool>();
      char buf[128];
      std::snprintf(buf, sizeof buf, " %s=%.3e%s%.1e", row["check"].get<std::string>().c_str(),
                    row["measured"].get<double>(), row["relation"].get<std::string>().c_str(),
                    row["tolerance"].get<double>());
      detail << buf;
    }
    all = all && pass;
    std::printf("criterion %d %s: %s |%s\n", c.id, pass ? "PASS" : "FAIL", c.title.c_str(),
                detail.str().c_str());
  }

  const bool identical = first.table == second.table && first.json == second.json;
  const bool exit_ok = first.code == 0 && second.code == 0;
  const bool pass9 = identical && exit_ok;
  all = all && pass9;
  std::printf("criterion 9 %s: verify --suite all --seed 42 twice | identical_reports=%s exit_codes=%d,%d\n",
              pass9 ? "PASS" : "FAIL", identical ? "yes" : "no", first.code, second.code);
  return all ? 0 : 1;
}
