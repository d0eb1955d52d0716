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
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "curveframe/cli.hpp"
#include "curveframe/curve_io.hpp"
#include "curveframe/error.hpp"

namespace curveframe::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

int exit_code_for(const CurveError& e) {
  switch (e.kind()) {
    case ErrorKind::parse:
    case ErrorKind::input:
      return kExitUsage;
    default:
      return kExitFailed;
  }
}

void emit(const std::string& out, const std::string& contents) {
  if (out.empty() || out == "-") {
    std::cout << contents;
  } else {
    write_file_atomic(out, contents);
  }
}

struct AnalyzeArgs {
  std::vector<std::string> specs;
  std::string out;
};

int cmd_analyze(const AnalyzeArgs& args, const CommonOptions& common) {
  struct Slot {
    std::optional<AnalysisOutcome> outcome;
    std::optional<CurveError> error;
  };
  std::vector<Slot> slots(args.specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < slots.size(); i = next++) {
      try {
        slots[i].outcome = analyze_curve(read_curve_spec(args.specs[i]), common);
      } catch (const CurveError& e) {
        slots[i].error = e;
      }
    }
  };
  const unsigned threads = std::min<unsigned>(
      std::max(1u, std::thread::hardware_concurrency()), static_cast<unsigned>(slots.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  int code = kExitOk;
  Json doc;
  doc["reports"] = Json::array();
  std::ostream& log = args.out.empty() ? std::cerr : std::cout;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].error) {
      const CurveError& e = *slots[i].error;
      Json failed;
      failed["curve"] = args.specs[i];
      failed["errors"] = Json::array({{{"check", "input"},
                                       {"kind", std::string(to_string(e.kind()))},
                                       {"message", e.what()}}});
      doc["reports"].push_back(failed);
      log << args.specs[i] << ": " << e.what() << '\n';
      code = std::max(code, exit_code_for(e));
      continue;
    }
    const AnalysisOutcome& o = *slots[i].outcome;
    doc["reports"].push_back(o.report);
    log << o.summary << '\n';
    if (!o.checks_passed || o.errors_raised) code = std::max(code, kExitFailed);
  }
  emit(args.out, doc.dump(2) + "\n");
  return code;
}

struct FramesArgs {
  std::string spec;
  std::string method = "rmf-double-reflection";
  int samples = 0;
  std::string out;
  std::string osculating;
};

int cmd_frames(const FramesArgs& args, const CommonOptions& common) {
  const Tolerances tol = common.tolerances();
  const ArcLengthCurve curve(read_curve_spec(args.spec), common.grid);
  const int samples = args.samples > 0 ? args.samples : common.grid + 1;
  const FrameMethod method = parse_frame_method(args.method);
  emit(args.out, frames_csv(compute_frames(curve, method, samples, tol)));
  if (!args.osculating.empty()) {
    write_file_atomic(args.osculating, osculating_csv(osculating_series(curve, samples, tol)));
  }
  return kExitOk;
}

struct DevplotArgs {
  std::string spec;
  int samples = 0;
  std::string out;
};

int cmd_devplot(const DevplotArgs& args, const CommonOptions& common) {
  const ArcLengthCurve curve(read_curve_spec(args.spec), common.grid);
  const int samples = args.samples > 0 ? args.samples : common.grid + 1;
  emit(args.out, devplot_svg(curve, samples, common.tolerances()));
  return kExitOk;
}

struct SweepArgs {
  std::string spec;
  double radius = 0.0;
  std::string method = "rm";
  int samples = 513;
  int segments = kDefaultTubeSegments;
  std::string out;
};

int cmd_sweep(const SweepArgs& args, const CommonOptions& common) {
  const CurveSpec spec = read_curve_spec(args.spec);
  const ArcLengthCurve curve(spec, common.grid);
  const SweepOutcome s = sweep_curve(curve, args.radius, args.method == "rm", args.samples,
                                     args.segments, common.tolerances());
  const std::string comment = "tube around " + spec.name + ", radius " + format_number(args.radius) +
                              ", " + args.method + " frames, twist " + format_number(s.twist);
  if (!args.out.empty()) write_file_atomic(args.out, to_obj(s.mesh, comment));
  std::cout << "method " << args.method << '\n'
            << "vertices " << s.mesh.vertices.size() << '\n'
            << "triangles " << s.mesh.triangles.size() << '\n'
            << "total_twist " << format_number(s.twist) << '\n'
            << "min_osculating_radius " << format_number(s.min_osculating_radius) << '\n';
  if (s.radius_warning) {
    std::cerr << "warning: tube radius " << format_number(args.radius)
              << " is not below the minimum osculating radius "
              << format_number(s.min_osculating_radius) << "; the tube may self-intersect\n";
  }
  if (args.out.empty()) std::cout << to_obj(s.mesh, comment);
  return kExitOk;
}

struct VerifyArgs {
  VerifyOptions options;
  std::string out;
};

int cmd_verify(VerifyArgs args, const CommonOptions& common) {
  args.options.seed = common.seed;
  args.options.tol_scale = common.tol_scale;
  const std::vector<CheckRow> rows = run_verify(args.options);
  std::cout << verify_table(rows, args.options);
  if (!args.out.empty()) {
    write_file_atomic(args.out, verify_json(rows, args.options).dump(2) + "\n");
  }
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

SweepOutcome sweep_curve(const ArcLengthCurve& curve, double radius, bool rm, int samples,
                         int segments, const Tolerances& tol) {
  if (!(radius > 0.0)) throw CurveError(ErrorKind::input, "tube radius must be positive");
  if (segments < 3) throw CurveError(ErrorKind::input, "tube needs at least 3 segments");
  FrameField field;
  if (rm) {
    field = compute_frames(curve, FrameMethod::rmf_double_reflection, samples, tol);
  } else {
    try {
      field = frenet_field(curve, samples, tol);
    } catch (const CurveError& e) {
      if (e.kind() != ErrorKind::inflection) throw;
      std::string detail = e.what();
      detail = detail.substr(detail.find(": ") + 2);
      throw CurveError(ErrorKind::inflection, detail + "; sweep with --method rm instead",
                       e.arclength());
    }
  }
  SweepOutcome out;
  double kappa_max = 0.0;
  for (std::size_t k = 0; k < field.size(); ++k) {
    const double kappa = rm ? std::hypot(field.k1[k], field.k2[k]) : field.k1[k];
    kappa_max = std::max(kappa_max, kappa);
  }
  out.min_osculating_radius =
      kappa_max > 0.0 ? 1.0 / kappa_max : std::numeric_limits<double>::infinity();
  out.radius_warning = radius >= out.min_osculating_radius;
  out.twist = total_twist(field);
  out.mesh = sweep_tube(field, radius, segments);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Frames, osculating spheres and sphericality or planarity tests for space curves"};
  app.name("curveframe");
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions common;
  app.add_option("--grid", common.grid, "arc-length grid intervals")
      ->check(CLI::Range(16, 1 << 22))
      ->capture_default_str();
  app.add_option("--tol-scale", common.tol_scale, "multiplies every tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", common.seed, "seed for randomized suites")->capture_default_str();

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "analyze curve specs and write a JSON report");
  a->add_option("specs", analyze.specs, "curve spec files")->required()->check(CLI::ExistingFile);
  a->add_option("--out", analyze.out, "report path (default: standard output)");

  FramesArgs frames;
  auto* f = app.add_subcommand("frames", "write a frame field as CSV");
  f->add_option("spec", frames.spec, "curve spec file")->required()->check(CLI::ExistingFile);
  f->add_option("--method", frames.method)
      ->check(CLI::IsMember({"frenet", "rmf-quadrature", "rmf-double-reflection", "rmf-spherical"}))
      ->capture_default_str();
  f->add_option("--samples", frames.samples, "samples including both ends (default: grid + 1)")
      ->check(CLI::Range(2, 1 << 22));
  f->add_option("--out", frames.out, "CSV path (default: standard output)");
  f->add_option("--osculating", frames.osculating, "also write osculating spheres as CSV");

  DevplotArgs devplot;
  auto* d = app.add_subcommand("devplot", "plot the normal development as SVG");
  d->add_option("spec", devplot.spec, "curve spec file")->required()->check(CLI::ExistingFile);
  d->add_option("--samples", devplot.samples)->check(CLI::Range(3, 1 << 22));
  d->add_option("--out", devplot.out, "SVG path (default: standard output)");

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "sweep a tube along the curve and write OBJ");
  s->add_option("spec", sweep.spec, "curve spec file")->required()->check(CLI::ExistingFile);
  s->add_option("--radius", sweep.radius, "tube radius")->required()->check(CLI::PositiveNumber);
  s->add_option("--method", sweep.method)
      ->check(CLI::IsMember({"frenet", "rm"}))
      ->capture_default_str();
  s->add_option("--samples", sweep.samples, "cross-sections")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
  s->add_option("--segments", sweep.segments, "vertices per cross-section")
      ->check(CLI::Range(3, 4096))
      ->capture_default_str();
  s->add_option("--out", sweep.out, "OBJ path (default: standard output)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run the property suites and print a pass/fail table");
  v->add_option("--suite", verify.options.suite)
      ->check(CLI::IsMember({"all", "spherical", "osculating", "planar"}))
      ->capture_default_str();
  v->add_option("--samples", verify.options.samples, "grid intervals")
      ->check(CLI::Range(64, 1 << 16))
      ->capture_default_str();
  v->add_option("--threads", verify.options.threads, "worker threads (0: all cores)");
  v->add_option("--out", verify.out, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*a) return cmd_analyze(analyze, common);
    if (*f) return cmd_frames(frames, common);
    if (*d) return cmd_devplot(devplot, common);
    if (*s) return cmd_sweep(sweep, common);
    if (*v) return cmd_verify(verify, common);
  } catch (const CurveError& e) {
    std::cerr << "curveframe: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "curveframe: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace curveframe::cli
