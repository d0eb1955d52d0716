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
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include "curveframe/cli.hpp"
#include "curveframe/error.hpp"
#include "curveframe/planar.hpp"
#include "curveframe/spherical.hpp"
#include "curveframe/stencil.hpp"
#include "curveframe/suites.hpp"

namespace curveframe::cli {

namespace {

constexpr std::array<double, 5> kTestFractions = {0.2, 0.35, 0.5, 0.65, 0.8};
constexpr double kRoundoffFloor = 1e-12;

// Named measurements of one curve; a missing key means not applicable.
struct Measurements {
  std::string curve;
  std::map<std::string, double> values;
  std::vector<std::string> errors;

  void max(const std::string& key, double v) {
    auto [it, inserted] = values.emplace(key, v);
    if (!inserted) it->second = std::max(it->second, v);
  }
  void min(const std::string& key, double v) {
    auto [it, inserted] = values.emplace(key, v);
    if (!inserted) it->second = std::min(it->second, v);
  }
  void add(const std::string& key, double v) { values[key] += v; }
};

using Task = std::function<Measurements()>;

std::vector<Measurements> run_parallel(const std::vector<Task>& tasks, unsigned threads) {
  std::vector<Measurements> out(tasks.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

Task guarded(const std::string& name, std::function<void(Measurements&)> body) {
  return [name, body] {
    Measurements m;
    m.curve = name;
    try {
      body(m);
    } catch (const CurveError& e) {
      m.errors.push_back(e.what());
    }
    return m;
  };
}

SphereFit fit_from_samples(const ArcLengthCurve& curve, const Tolerances& tol) {
  std::vector<Vec3> pts;
  for (int k = 0; k <= 512; ++k) pts.push_back(curve.position_at(curve.length() * k / 512));
  return fit_sphere(pts, tol);
}

// Spread of the angle from a's n1 to b's n1 about the tangent, unwrapped.
double gauge_spread(const FrameField& a, const FrameField& b) {
  double lo = 0.0, hi = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double angle = signed_angle(a.frames[i].e2, b.frames[i].e2, a.frames[i].e1);
    if (i == 0) {
      lo = hi = prev = angle;
      continue;
    }
    angle = prev + std::remainder(angle - prev, 2.0 * std::numbers::pi);
    prev = angle;
    lo = std::min(lo, angle);
    hi = std::max(hi, angle);
  }
  return hi - lo;
}

double end_discrepancy(const ArcLengthCurve& curve, int n, const Tolerances& tol) {
  const FrameField q = rmf_by_quadrature(curve, n, 0.0, tol);
  const FrameField d = rmf_by_double_reflection(curve, n, tol);
  const double start = signed_angle(q.frames.front().e2, d.frames.front().e2, q.frames.front().e1);
  const double end = signed_angle(q.frames.back().e2, d.frames.back().e2, q.frames.back().e1);
  return std::abs(std::remainder(end - start, 2.0 * std::numbers::pi));
}

void measure_spherical(const CurveSpec& spec, int n, const Tolerances& tol, Measurements& m) {
  const ArcLengthCurve curve(spec, n - 1);
  const double r_true = std::get<SphericalFourierParams>(spec.params).radius;

  const FrameField q = rmf_by_quadrature(curve, n, 0.0, tol);
  const SphericalityVerdict verdict = sphericality_test(normal_development(q), tol);
  m.add("thm1.not_spherical", verdict.spherical ? 0.0 : 1.0);
  m.max("thm1.line_residual", verdict.line_residual / verdict.max_norm);
  m.max("thm1.radius", std::abs(1.0 / verdict.distance - r_true) / r_true);

  const SphereFit fit = fit_from_samples(curve, tol);
  const SphericalCurvatureSeries series = spherical_curvature_series(curve, fit.center, n);
  double kappa_max = 0.0, tau_max = 0.0, err_k = 0.0, err_t = 0.0, err_jp = 0.0, jp_max = 0.0;
  double min_kr = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < series.ss.size(); ++i) {
    const Jet u = curve.unit_jet_at(series.ss[i], 3);
    const FrenetApparatus fa = frenet_apparatus(u, tol);
    const auto [kappa, tau] = kappa_tau_from_J(series.J[i], series.J_prime[i], fit.radius);
    kappa_max = std::max(kappa_max, fa.kappa);
    tau_max = std::max(tau_max, std::abs(fa.tau.value_or(0.0)));
    err_k = std::max(err_k, std::abs(fa.kappa - kappa));
    err_t = std::max(err_t, std::abs(fa.tau.value_or(0.0) - tau));
    const double jp = spherical_curvature_rate(u, fit.center);
    err_jp = std::max(err_jp, std::abs(jp - series.J_prime[i]));
    jp_max = std::max(jp_max, std::abs(jp));
    min_kr = std::min(min_kr, fa.kappa * fit.radius);
  }
  m.max("thm2.kappa", err_k / kappa_max);
  m.max("thm2.tau", err_t / std::max(1.0, tau_max));
  m.max("thm2.j_prime_identity", err_jp / std::max(1.0, jp_max));
  m.max("sphere.no_inflection", std::max(0.0, 1.0 - min_kr));

  const double atan0 = rm_angle_from_J(series.J.front());
  for (int part = 1; part <= 8; ++part) {
    const std::size_t k = (series.ss.size() - 1) * part / 8;
    const double dtheta = q.theta[k] - q.theta.front();
    m.max("thm2.delta_theta", std::abs(dtheta - (rm_angle_from_J(series.J[k]) - atan0)));
  }

  const FrameField exact = spherical_rmf(curve, fit, n, tol);
  double k1_err = 0.0;
  for (double k1 : exact.k1) k1_err = std::max(k1_err, std::abs(k1 + 1.0 / fit.radius));
  m.max("sph_rmf.k1", k1_err);
  m.max("sph_rmf.defect", rm_defect(exact));
  m.max("sph_rmf.gauge_spread", gauge_spread(q, exact));
}

void measure_spherical_osculating(const CurveSpec& spec, int n, const Tolerances& tol,
                                  Measurements& m) {
  const ArcLengthCurve curve(spec, n - 1);
  const OsculatingSeries series = osculating_series(curve, n, tol);
  double sigma = 0.0;
  for (double v : series.sigma) sigma = std::max(sigma, std::abs(v));
  m.max("prop1.sigma_spherical", sigma);
  for (double f : kTestFractions) {
    const double s = f * curve.length();
    const SphereNormalDerivative d = sphere_normal_derivative_check(curve, s, kDefaultStep, tol);
    const LocalGeometry g = local_geometry(curve, s, kDefaultStep, tol);
    m.max("prop1.reduces_to_t_over_R", (d.lhs - g.frame.e1 / g.sphere.radius).norm());
    m.max("sphere.center_velocity", osculating_center_velocity(curve, s, kDefaultStep, tol).norm());
  }
}

void measure_twisted(const CurveSpec& spec, int n, const Tolerances& tol, Measurements& m) {
  const ArcLengthCurve curve(spec, n - 1);
  const FrameField q = rmf_by_quadrature(curve, n, 0.0, tol);
  const auto dk1 = differentiate(std::span<const double>(q.k1), q.spacing(), 1);
  const auto dk2 = differentiate(std::span<const double>(q.k2), q.spacing(), 1);
  for (double f : kTestFractions) {
    const std::size_t i = static_cast<std::size_t>(std::lround(f * (n - 1)));
    const double s = q.ss[i];
    const LocalGeometry g = local_geometry(curve, s, kDefaultStep, tol);
    for (double c : contact_residuals(g.sphere, g.unit_jet)) m.max("contact.g", std::abs(c));
    const OsculatingSphere rm =
        osculating_sphere_rm(q.k1[i], q.k2[i], dk1[i], dk2[i], q.frames[i], q.points[i], tol);
    m.max("contact.frenet_vs_rm", (rm.center - g.sphere.center).norm() / g.sphere.radius);
    m.max("prop1.residual_twisted",
          sphere_normal_derivative_check(curve, s, kDefaultStep, tol).residual);
    const Theorem3Check t3 = theorem3_check(curve, s, -1.0, 401, tol);
    m.max("thm3.kappa", std::abs(t3.kappa_alpha - t3.kappa_beta));
    m.max("thm3.tau", std::abs(t3.tau_alpha - t3.tau_beta));
    m.max("thm3.tau_decomposition", t3.tau_decomposition_residual);
    m.max("thm3.contact_order", t3.contact_order_error);
  }
}

void measure_helix(int n, const Tolerances& tol, Measurements& m) {
  const ArcLengthCurve curve(make_helix(1.0, 1.0), n - 1);
  const double s = 0.5 * curve.length();
  const Theorem3Check t3 = theorem3_check(curve, s, -1.0, 401, tol);
  double err = std::max({std::abs(t3.kappa_alpha - 0.5), std::abs(t3.tau_alpha - 0.5),
                         std::abs(t3.kappa_beta - 0.5), std::abs(t3.J), std::abs(t3.sigma - 1.0)});
  m.max("helix.closed_form", err);
  m.max("helix.tau_beta", std::abs(t3.tau_beta - 0.5));
  m.max("helix.tau_decomposition", t3.tau_decomposition_residual);
  const LocalGeometry g = local_geometry(curve, s, kDefaultStep, tol);
  const double speed = osculating_center_velocity(curve, s, kDefaultStep, tol).norm();
  m.max("helix.center_velocity_is_sigma", std::abs(speed - std::abs(g.sigma)));
}

void measure_plane(const CurveSpec& spec, int n, const Tolerances& tol, Measurements& m) {
  const ArcLengthCurve curve(spec, n - 1);
  const FrameField field = rmf_by_double_reflection(curve, n, tol);
  const PlanarityReport rep = theorem4_verdict(field, tol);
  m.add("thm4.planar_missed", rep.verdict == PlanarityVerdict::planar ? 0.0 : 1.0);
  m.max("thm4.system_residual", rep.system_residual);
}

void measure_not_planar(const CurveSpec& spec, int n, const Tolerances& tol, Measurements& m) {
  const ArcLengthCurve curve(spec, n - 1);
  const FrameField q = rmf_by_quadrature(curve, n, 0.0, tol);
  const PlanarityReport rep = theorem4_verdict(q, tol);
  m.add("thm4.not_planar_missed", rep.verdict == PlanarityVerdict::not_planar ? 0.0 : 1.0);
  for (double c : rep.gauge_certificates) m.min("thm4.certificate", c);

  m.max("rm.cross_method", end_discrepancy(curve, n, tol));
  double previous = end_discrepancy(curve, 513, tol);
  double violations = 0.0;
  for (int intervals : {1024, 2048}) {
    const double d = end_discrepancy(curve, intervals + 1, tol);
    if (d >= previous && previous > kRoundoffFloor) violations += 1.0;
    previous = d;
  }
  m.add("rm.halving_not_monotone", violations);
}

void measure_spherical_rm_plane(const CurveSpec& spec, int n, const Tolerances& tol,
                                Measurements& m) {
  // The sphere normal is an RM field and alpha - p = r N lies in span{t, N}.
  const ArcLengthCurve curve(spec, n - 1);
  const SphereFit fit = fit_from_samples(curve, tol);
  const FrameField exact = spherical_rmf(curve, fit, n, tol);
  m.max("rm_plane.spherical_system", rm_plane_decomposition(exact, fit.center).max_residual());
  std::vector<Vec3> pts(exact.points.begin(), exact.points.end());
  m.min("rm_plane.spherical_plane_residual", fit_plane(pts).rms_residual);
}

struct RowSpec {
  std::string suite;
  std::string key;
  std::string name;
  double tolerance;
  bool upper_bound;
  bool minimum;  // aggregate by min instead of max/sum
  bool sum;
};

std::vector<CheckRow> aggregate(const std::vector<RowSpec>& specs,
                                const std::vector<Measurements>& results,
                                const std::string& suite, double scale) {
  std::vector<CheckRow> rows;
  for (const RowSpec& spec : specs) {
    if (spec.suite != suite) continue;
    CheckRow row;
    row.suite = spec.suite;
    row.name = spec.name;
    row.tolerance = spec.tolerance * (spec.sum ? 1.0 : scale);
    row.upper_bound = spec.upper_bound;
    bool seen = false;
    double value = 0.0;
    std::string where;
    for (const Measurements& m : results) {
      auto it = m.values.find(spec.key);
      if (it == m.values.end()) continue;
      const double v = it->second;
      if (!seen) {
        value = v;
        where = m.curve;
        seen = true;
      } else if (spec.sum) {
        value += v;
        if (v > 0.0 && where.empty()) where = m.curve;
      } else if (spec.minimum ? v < value : v > value) {
        value = v;
        where = m.curve;
      }
    }
    if (!seen) {
      row.measured = std::nan("");
      row.pass = false;
      row.detail = "no measurements";
    } else {
      row.measured = value;
      row.pass = spec.upper_bound ? value < row.tolerance : value > row.tolerance;
      row.detail = spec.sum ? "" : "worst: " + where;
    }
    rows.push_back(row);
  }
  std::size_t errors = 0;
  std::string first_error;
  for (const Measurements& m : results) {
    errors += m.errors.size();
    if (first_error.empty() && !m.errors.empty()) first_error = m.curve + ": " + m.errors.front();
  }
  CheckRow err;
  err.suite = suite;
  err.name = "errors.raised";
  err.measured = static_cast<double>(errors);
  err.tolerance = 0.5;
  err.pass = errors == 0;
  err.detail = first_error;
  rows.push_back(err);
  return rows;
}

const std::vector<RowSpec>& row_specs() {
  static const std::vector<RowSpec> specs = {
      {"spherical", "thm1.not_spherical", "thm1.spherical_verdicts_missed", 0.5, true, false, true},
      {"spherical", "thm1.line_residual", "thm1.line_residual_rel", 1e-6, true, false, false},
      {"spherical", "thm1.radius", "thm1.radius_rel_error", 1e-4, true, false, false},
      {"spherical", "thm2.kappa", "thm2.kappa_rel", 1e-6, true, false, false},
      {"spherical", "thm2.tau", "thm2.tau_rel", 1e-6, true, false, false},
      {"spherical", "thm2.delta_theta", "thm2.delta_theta_vs_arctan_J", 1e-6, true, false, false},
      {"spherical", "thm2.j_prime_identity", "thm2.j_prime_fd_vs_third_derivative", 1e-6, true,
       false, false},
      {"spherical", "sphere.no_inflection", "sphere.kappa_r_below_one", 1e-8, true, false, false},
      {"spherical", "sph_rmf.k1", "sph_rmf.k1_plus_inverse_r", 1e-10, true, false, false},
      {"spherical", "sph_rmf.defect", "sph_rmf.rm_defect", 1e-6, true, false, false},
      {"spherical", "sph_rmf.gauge_spread", "sph_rmf.gauge_spread_vs_quadrature", 1e-6, true,
       false, false},
      {"osculating", "contact.g", "contact.max_g_derivatives", 1e-6, true, false, false},
      {"osculating", "contact.frenet_vs_rm", "contact.frenet_vs_rm_center_rel", 1e-6, true, false,
       false},
      {"osculating", "prop1.residual_twisted", "prop1.sphere_normal_derivative", 1e-4, true,
       false, false},
      {"osculating", "prop1.sigma_spherical", "prop1.max_sigma_spherical", 1e-5, true, false,
       false},
      {"osculating", "prop1.reduces_to_t_over_R", "prop1.derivative_is_t_over_R", 1e-5, true,
       false, false},
      {"osculating", "sphere.center_velocity", "prop1.center_velocity_spherical", 1e-5, true,
       false, false},
      {"osculating", "thm3.kappa", "thm3.kappa_alpha_vs_beta", 1e-5, true, false, false},
      {"osculating", "thm3.tau", "thm3.tau_alpha_vs_beta", 1e-4, true, false, false},
      {"osculating", "thm3.tau_decomposition", "thm3.tau_decomposition", 1e-5, true, false, false},
      {"osculating", "thm3.contact_order", "thm3.contact_order", 1e-4, true, false, false},
      {"osculating", "helix.closed_form", "helix.kappa_tau_J_sigma", 1e-6, true, false, false},
      {"osculating", "helix.tau_beta", "helix.tau_beta", 1e-4, true, false, false},
      {"osculating", "helix.tau_decomposition", "helix.tau_decomposition", 1e-6, true, false,
       false},
      {"osculating", "helix.center_velocity_is_sigma", "helix.center_velocity_is_sigma", 1e-6,
       true, false, false},
      {"planar", "thm4.planar_missed", "thm4.planar_verdicts_missed", 0.5, true, false, true},
      {"planar", "thm4.system_residual", "thm4.planar_system_residual", 1e-6, true, false, false},
      {"planar", "thm4.not_planar_missed", "thm4.not_planar_verdicts_missed", 0.5, true, false,
       true},
      {"planar", "thm4.certificate", "thm4.min_certificate_all_gauges", 1e-2, false, true, false},
      {"planar", "rm.cross_method", "rm.double_reflection_vs_quadrature", 1e-6, true, false,
       false},
      {"planar", "rm.halving_not_monotone", "rm.halving_not_monotone", 0.5, true, false, true},
      {"planar", "rm_plane.spherical_system", "rm_plane.spherical_sphere_normal_system", 1e-6,
       true, false, false},
      {"planar", "rm_plane.spherical_plane_residual", "rm_plane.spherical_off_plane", 1e-3, false,
       true, false},
  };
  return specs;
}

}  // namespace

std::vector<CheckRow> run_verify(const VerifyOptions& options) {
  if (options.suite != "all" && options.suite != "spherical" && options.suite != "osculating" &&
      options.suite != "planar") {
    throw CurveError(ErrorKind::input, "unknown suite '" + options.suite + "'");
  }
  if (options.samples < 64) throw CurveError(ErrorKind::input, "verify needs --samples >= 64");
  const Tolerances tol = default_tolerances().scaled(options.tol_scale);
  const int n = options.samples + 1;
  const auto spherical = spherical_suite(options.seed);
  const auto twisted = twisted_suite(options.seed);
  const auto plane = plane_suite(options.seed);

  std::vector<CheckRow> rows;
  auto wants = [&](const std::string& s) { return options.suite == "all" || options.suite == s; };
  if (wants("spherical")) {
    std::vector<Task> tasks;
    for (const auto& spec : spherical) {
      tasks.push_back(guarded(spec.name, [=](Measurements& m) { measure_spherical(spec, n, tol, m); }));
    }
    auto part = aggregate(row_specs(), run_parallel(tasks, options.threads), "spherical",
                          options.tol_scale);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  if (wants("osculating")) {
    std::vector<Task> tasks;
    for (const auto& spec : twisted) {
      tasks.push_back(guarded(spec.name, [=](Measurements& m) { measure_twisted(spec, n, tol, m); }));
    }
    for (const auto& spec : spherical) {
      tasks.push_back(guarded(spec.name, [=](Measurements& m) {
        measure_spherical_osculating(spec, n, tol, m);
      }));
    }
    tasks.push_back(guarded("helix", [=](Measurements& m) { measure_helix(n, tol, m); }));
    auto part = aggregate(row_specs(), run_parallel(tasks, options.threads), "osculating",
                          options.tol_scale);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  if (wants("planar")) {
    std::vector<Task> tasks;
    for (const auto& spec : plane) {
      tasks.push_back(guarded(spec.name, [=](Measurements& m) { measure_plane(spec, n, tol, m); }));
    }
    for (const auto& spec : twisted) {
      tasks.push_back(guarded(spec.name, [=](Measurements& m) {
        measure_not_planar(spec, n, tol, m);
      }));
    }
    for (const auto& spec : spherical) {
      tasks.push_back(guarded(spec.name, [=](Measurements& m) {
        measure_spherical_rm_plane(spec, n, tol, m);
      }));
    }
    auto part = aggregate(row_specs(), run_parallel(tasks, options.threads), "planar",
                          options.tol_scale);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::string verify_table(const std::vector<CheckRow>& rows, const VerifyOptions& options) {
  std::ostringstream out;
  out << "curveframe verify suite=" << options.suite << " seed=" << options.seed
      << " samples=" << options.samples << " tol-scale=" << format_number(options.tol_scale)
      << '\n';
  char line[512];
  std::snprintf(line, sizeof line, "%-11s %-42s %12s %2s %10s  %s\n", "suite", "check", "measured",
                "", "tolerance", "verdict");
  out << line;
  std::size_t failed = 0;
  for (const CheckRow& r : rows) {
    std::snprintf(line, sizeof line, "%-11s %-42s %12.4e %2s %10.3e  %s", r.suite.c_str(),
                  r.name.c_str(), r.measured, r.upper_bound ? "<" : ">", r.tolerance,
                  r.pass ? "PASS" : "FAIL");
    out << line;
    if (!r.detail.empty()) out << "  (" << r.detail << ')';
    out << '\n';
    if (!r.pass) ++failed;
  }
  out << rows.size() - failed << '/' << rows.size() << " checks passed\n";
  return out.str();
}

Json verify_json(const std::vector<CheckRow>& rows, const VerifyOptions& options) {
  Json doc;
  doc["suite"] = options.suite;
  doc["seed"] = options.seed;
  doc["samples"] = options.samples;
  doc["tol_scale"] = options.tol_scale;
  Json checks = Json::array();
  bool all = true;
  for (const CheckRow& r : rows) {
    Json row;
    row["suite"] = r.suite;
    row["check"] = r.name;
    row["measured"] = std::isfinite(r.measured) ? Json(r.measured) : Json(nullptr);
    row["relation"] = r.upper_bound ? "<" : ">";
    row["tolerance"] = r.tolerance;
    row["pass"] = r.pass;
    if (!r.detail.empty()) row["detail"] = r.detail;
    checks.push_back(row);
    all = all && r.pass;
  }
  doc["checks"] = checks;
  doc["passed"] = all;
  return doc;
}

}  // namespace curveframe::cli
