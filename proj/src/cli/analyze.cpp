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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "curveframe/cli.hpp"
#include "curveframe/error.hpp"
#include "curveframe/planar.hpp"
#include "curveframe/spherical.hpp"

namespace curveframe::cli {

namespace {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json vec(const Vec3& v) { return Json::array({number(v.x()), number(v.y()), number(v.z())}); }

struct FrenetStats {
  double kappa_min = std::numeric_limits<double>::infinity();
  double kappa_max = 0.0;
  double tau_min = std::numeric_limits<double>::infinity();
  double tau_max = -std::numeric_limits<double>::infinity();
  double total_torsion = 0.0;
  int inflections = 0;
};

FrenetStats frenet_stats(const ArcLengthCurve& curve, int n, const Tolerances& tol) {
  FrenetStats st;
  const double h = curve.length() / (n - 1);
  double prev_tau = 0.0;
  bool prev_ok = false;
  for (int k = 0; k < n; ++k) {
    const FrenetApparatus fa = frenet_apparatus(curve.unit_jet_at(h * k, 3), tol);
    st.kappa_min = std::min(st.kappa_min, fa.kappa);
    st.kappa_max = std::max(st.kappa_max, fa.kappa);
    if (fa.is_inflection()) {
      ++st.inflections;
      prev_ok = false;
      continue;
    }
    const double tau = fa.tau.value_or(0.0);
    st.tau_min = std::min(st.tau_min, tau);
    st.tau_max = std::max(st.tau_max, tau);
    if (prev_ok) st.total_torsion += 0.5 * h * (prev_tau + tau);
    prev_tau = tau;
    prev_ok = true;
  }
  return st;
}

double end_discrepancy(const FrameField& a, const FrameField& b) {
  const auto angle = [&](std::size_t k) {
    return signed_angle(a.frames[k].e2, b.frames[k].e2, a.frames[k].e1);
  };
  return std::abs(std::remainder(angle(a.size() - 1) - angle(0), 2.0 * std::numbers::pi));
}

class CheckList {
 public:
  void add(const std::string& name, double measured, double tolerance, bool upper = true) {
    const bool pass = upper ? measured < tolerance : measured > tolerance;
    Json row;
    row["name"] = name;
    row["measured"] = number(measured);
    row["relation"] = upper ? "<" : ">";
    row["tolerance"] = tolerance;
    row["pass"] = pass;
    rows_.push_back(row);
    ++total_;
    if (pass) ++passed_;
  }
  void require(const std::string& name, bool condition, const std::string& detail) {
    Json row;
    row["name"] = name;
    row["pass"] = condition;
    row["detail"] = detail;
    rows_.push_back(row);
    ++total_;
    if (condition) ++passed_;
  }
  const Json& rows() const { return rows_; }
  int total() const { return total_; }
  int passed() const { return passed_; }

 private:
  Json rows_ = Json::array();
  int total_ = 0;
  int passed_ = 0;
};

}  // namespace

AnalysisOutcome analyze_curve(const CurveSpec& spec, const CommonOptions& options) {
  const Tolerances tol = options.tolerances();
  const int n = options.grid + 1;
  AnalysisOutcome out;
  Json& report = out.report;
  Json errors = Json::array();
  CheckList checks;
  const auto fail = [&](const std::string& check, const CurveError& e) {
    Json err;
    err["check"] = check;
    err["kind"] = std::string(to_string(e.kind()));
    err["message"] = e.what();
    if (e.arclength()) err["s"] = *e.arclength();
    errors.push_back(err);
  };

  report["curve"] = spec.name;
  report["family"] = to_string(spec.family());
  report["grid"] = options.grid;
  report["tol_scale"] = options.tol_scale;

  std::optional<ArcLengthCurve> curve;
  try {
    curve.emplace(spec, options.grid);
    report["length"] = curve->length();
    report["closed"] = curve->is_closed();
  } catch (const CurveError& e) {
    fail("curve", e);
  }

  std::optional<FrameField> rm;
  std::optional<SphericalityVerdict> sphere_verdict;
  std::optional<PlanarityReport> planarity;
  bool circle = false;
  if (curve) {
    // Frenet apparatus
    const FrenetStats st = frenet_stats(*curve, n, tol);
    Json frenet;
    frenet["kappa_min"] = number(st.kappa_min);
    frenet["kappa_max"] = number(st.kappa_max);
    frenet["tau_min"] = st.inflections == n ? Json(nullptr) : number(st.tau_min);
    frenet["tau_max"] = st.inflections == n ? Json(nullptr) : number(st.tau_max);
    frenet["total_torsion"] = st.inflections == 0 ? number(st.total_torsion) : Json(nullptr);
    frenet["inflection_samples"] = st.inflections;
    report["frenet"] = frenet;
    circle = st.inflections == 0 && st.kappa_max - st.kappa_min <= tol.relative * st.kappa_max &&
             std::max(std::abs(st.tau_min), std::abs(st.tau_max)) <= tol.torsion;

    // Rotation minimizing frame
    Json rmj = Json::object();
    try {
      if (st.inflections == 0) {
        FrameField q = rmf_by_quadrature(*curve, n, 0.0, tol);
        const FrameField d = rmf_by_double_reflection(*curve, n, tol);
        rmj["method"] = "quadrature";
        rmj["total_delta_theta"] = q.theta.back() - q.theta.front();
        const double disc = end_discrepancy(q, d);
        rmj["cross_method_discrepancy"] = disc;
        checks.add("rm.cross_method_discrepancy", disc, tol.rm_plane_system);
        rm = std::move(q);
      } else {
        rm = rmf_by_double_reflection(*curve, n, tol);
        rmj["method"] = "double-reflection";
        rmj["total_delta_theta"] = nullptr;
        rmj["cross_method_discrepancy"] = nullptr;
      }
      const double defect = rm_defect(*rm);
      rmj["defect"] = defect;
      checks.add("rm.defect", defect, tol.rm_defect);
      const auto [k1min, k1max] = std::minmax_element(rm->k1.begin(), rm->k1.end());
      const auto [k2min, k2max] = std::minmax_element(rm->k2.begin(), rm->k2.end());
      rmj["k1_range"] = Json::array({*k1min, *k1max});
      rmj["k2_range"] = Json::array({*k2min, *k2max});
    } catch (const CurveError& e) {
      fail("rm", e);
    }
    report["rm"] = rmj;

    // Sphericality via the normal development
    Json sph = Json::object();
    if (rm) {
      try {
        const SphericalityVerdict v = sphericality_test(normal_development(*rm), tol);
        sphere_verdict = v;
        sph["verdict"] = v.spherical ? "spherical" : "not_spherical";
        sph["line_residual"] = v.line_residual;
        sph["relative_line_residual"] = v.max_norm > 0.0 ? v.line_residual / v.max_norm : 0.0;
        sph["distance"] = v.distance;
        sph["degenerate_development"] = v.degenerate;
        if (v.spherical) {
          const SphereFit fit = sphere_from_development(*rm, v);
          sph["center"] = vec(fit.center);
          sph["radius"] = fit.radius;
          sph["fit_rms"] = fit.rms_residual;
          checks.add("sphericality.points_on_recovered_sphere", fit.rms_residual / fit.radius,
                     tol.line_residual);
        } else {
          sph["center"] = nullptr;
          sph["radius"] = nullptr;
          sph["fit_rms"] = nullptr;
        }
      } catch (const CurveError& e) {
        fail("sphericality", e);
      }
    }
    report["sphericality"] = sph;

    // Spherical deviation sigma
    Json dev = Json::object();
    try {
      const OsculatingSeries series = osculating_series(*curve, n, tol);
      dev["samples"] = series.sigma.size();
      dev["skipped_zero_torsion"] = n - static_cast<int>(series.sigma.size());
      if (!series.sigma.empty()) {
        double mx = 0.0, mean = 0.0;
        for (double v : series.sigma) {
          mx = std::max(mx, std::abs(v));
          mean += std::abs(v);
        }
        mean /= static_cast<double>(series.sigma.size());
        dev["max_abs_sigma"] = mx;
        dev["mean_abs_sigma"] = mean;
        const bool vanishes = mx < tol.spherical_deviation;
        dev["vanishes"] = vanishes;
        if (sphere_verdict) {
          const bool agree = vanishes == sphere_verdict->spherical;
          dev["agrees_with_development"] = agree;
          if (spec.family() != CurveFamily::polyline) {
            checks.require("sphericality.sigma_agrees_with_development", agree,
                           vanishes ? "sigma vanishes" : "sigma does not vanish");
          }
        }
      } else {
        dev["max_abs_sigma"] = nullptr;
        dev["mean_abs_sigma"] = nullptr;
        dev["vanishes"] = nullptr;
      }
    } catch (const CurveError& e) {
      if (e.kind() == ErrorKind::inflection) {
        dev["skipped"] = e.what();
      } else {
        fail("spherical_deviation", e);
      }
    }
    report["spherical_deviation"] = dev;

    // Planarity
    Json pl = Json::object();
    if (rm) {
      try {
        PlanarityReport rep = theorem4_verdict(*rm, tol);
        std::string verdict = to_string(rep.verdict);
        if (rep.verdict == PlanarityVerdict::indeterminate && sphere_verdict &&
            sphere_verdict->spherical) {
          verdict = to_string(PlanarityVerdict::not_planar);
          pl["note"] =
              "spherical curves satisfy the RM plane system with p at the sphere center; "
              "not planar because the plane fit residual exceeds tolerance";
        }
        pl["verdict"] = verdict;
        pl["plane_residual"] = rep.plane.rms_residual;
        pl["relative_plane_residual"] =
            rep.diameter > 0.0 ? rep.plane.rms_residual / rep.diameter : 0.0;
        if (rep.verdict == PlanarityVerdict::planar) {
          pl["plane_normal"] = vec(rep.plane.normal);
          pl["anchor"] = vec(rep.anchor);
          pl["gauge_angle"] = rep.gauge_angle;
          pl["system_residual"] = rep.system_residual;
          checks.add("planarity.system_residual", rep.system_residual, tol.rm_plane_system);
        } else {
          pl["certificate"] = rep.certificate;
          pl["certificate_point"] = vec(rep.certificate_point);
          Json gauges = Json::array();
          for (std::size_t g = 0; g < rep.gauges.size(); ++g) {
            gauges.push_back({{"angle", rep.gauges[g]}, {"certificate", rep.gauge_certificates[g]}});
          }
          pl["gauges"] = gauges;
        }
        planarity = std::move(rep);
        if (verdict == "not_planar") planarity->verdict = PlanarityVerdict::not_planar;
      } catch (const CurveError& e) {
        fail("planarity", e);
      }
    }
    report["planarity"] = pl;
  }

  const bool spherical = sphere_verdict && sphere_verdict->spherical;
  const bool planar = planarity && planarity->verdict == PlanarityVerdict::planar;
  report["consistency"] = {{"spherical", spherical}, {"planar", planar}, {"circle", circle}};
  checks.require("verdicts.consistent", !(spherical && planar) || circle,
                 spherical && planar ? "spherical and planar" : "at most one of spherical, planar");

  report["checks"] = checks.rows();
  report["errors"] = errors;
  out.checks_passed = checks.passed() == checks.total();
  out.errors_raised = !errors.empty();

  std::string summary = spec.name + ": ";
  summary += sphere_verdict ? (spherical ? "spherical" : "not_spherical") : "sphericality n/a";
  if (spherical) summary += " (r=" + format_number(report["sphericality"]["radius"]) + ")";
  summary += ", ";
  summary += planarity ? to_string(planarity->verdict) : "planarity n/a";
  summary += "; " + std::to_string(checks.passed()) + "/" + std::to_string(checks.total()) +
             " checks passed";
  if (!errors.empty()) summary += "; " + std::to_string(errors.size()) + " error(s)";
  out.summary = summary;
  report["summary"] = summary;
  return out;
}

}  // namespace curveframe::cli
