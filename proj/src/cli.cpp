// Copyright (c) 2026, The minmax-curve Authors
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

#include "mmc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "mmc/baselines.hpp"
#include "mmc/certificates.hpp"
#include "mmc/dubins.hpp"
#include "mmc/error.hpp"
#include "mmc/json_io.hpp"
#include "mmc/offsets.hpp"
#include "mmc/optimal.hpp"
#include "mmc/random.hpp"

namespace mmc::cli {
namespace {

struct Options {
  std::string input;
  std::string output;
  std::string svg;
  std::optional<double> offset;
  int grid = 200;
  int d2_levels = 1;
  int samples = 256;
  double radius = 0.0;
  std::optional<std::uint64_t> seed;
};

Json load_json(const std::string& value) {
  const auto first = std::find_if_not(value.begin(), value.end(),
                                      [](unsigned char c) { return std::isspace(c) != 0; });
  std::string text;
  if (first != value.end() && *first == '{') {
    text = value;
  } else {
    std::ifstream in(value);
    if (!in) fail(ErrorCode::kInvalidInput, "cannot read input file \"" + value + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::kInvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::kInvalidInput, "cannot write \"" + path + "\"");
  f << text;
}

void write_json(const Json& j, const std::string& path, std::ostream& out) {
  write_text(dump_json(j) + "\n", path, out);
}

const Json& unwrap(const Json& j, const char* key) {
  if (j.is_object() && j.contains(key)) return j.at(key);
  return j;
}

void require_input(const Options& o) {
  if (o.input.empty()) fail(ErrorCode::kInvalidInput, "--input is required");
}

int cmd_solve(const Options& o, std::ostream& out) {
  require_input(o);
  const ProblemInstance inst = instance_from_json(unwrap(load_json(o.input), "instance"));
  const OptimalSolution sol = synthesize(inst);
  write_json(solution_to_json(sol, inst), o.output, out);
  if (!o.svg.empty()) {
    const PiecewiseCurve shown = inst.reversed() ? reverse(sol.curve) : sol.curve;
    write_text(to_svg(std::span<const PiecewiseCurve>(&shown, 1)), o.svg, out);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_input(o);
  if (o.samples < 2) fail(ErrorCode::kInvalidInput, "--samples must be at least 2");
  const Json j = load_json(o.input);
  if (!j.is_object() || !j.contains("instance") || !j.contains("curve")) {
    fail(ErrorCode::kInvalidInput, "verify needs an object with \"instance\" and \"curve\"");
  }
  const ProblemInstance inst = instance_from_json(j.at("instance"));
  const PiecewiseCurve given = curve_from_json(j.at("curve"));
  if (given.empty()) fail(ErrorCode::kInvalidInput, "empty curve");
  // Checks run in the normalized orientation.
  const PiecewiseCurve curve = inst.reversed() ? reverse(given) : given;
  const MembershipReport report = check_membership(curve, inst);
  Json result{{"membership", membership_to_json(report)}, {"maxCurvature", round15(max_curvature(curve))}};
  result["certificate"] = nullptr;
  if (report.in_e) result["certificate"] = certificate_to_json(certify(curve, inst, o.samples));
  write_json(result, o.output, out);
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.grid < 2) fail(ErrorCode::kInvalidInput, "--grid must be at least 2");
  if (o.d2_levels < 1) fail(ErrorCode::kInvalidInput, "--d2-levels must be at least 1");
  std::optional<ProblemInstance> inst;
  if (!o.input.empty()) {
    inst = instance_from_json(unwrap(load_json(o.input), "instance"));
  } else if (o.seed) {
    std::mt19937_64 rng(*o.seed);
    inst = random_instance(rng);
  } else {
    fail(ErrorCode::kInvalidInput, "sweep needs --input or --seed");
  }
  SweepGrid grid;
  grid.n = o.grid;
  grid.d2_levels = o.d2_levels;
  Json result = sweep_to_json(family_sweep(*inst, grid));
  result["instance"] = instance_to_json(*inst);
  write_json(result, o.output, out);
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  require_input(o);
  const ProblemInstance inst = instance_from_json(unwrap(load_json(o.input), "instance"));
  Json result = comparison_to_json(compare_report(inst));
  result["instance"] = instance_to_json(inst);
  write_json(result, o.output, out);
  return kExitOk;
}

int cmd_export(const Options& o, std::ostream& out) {
  require_input(o);
  const PiecewiseCurve curve = curve_from_json(unwrap(load_json(o.input), "curve"));
  std::vector<PiecewiseCurve> curves{curve};
  SvgStyle style;
  if (o.offset) {
    const OffsetResult off = offset(curve, *o.offset);
    curves.push_back(off.left);
    curves.push_back(off.right);
  }
  const std::string svg = to_svg(curves, style);
  write_text(svg, o.output.empty() ? o.svg : o.output, out);
  return kExitOk;
}

int cmd_illposed(const Options& o, std::ostream& out) {
  Point2 A{0.0, 0.0};
  Vec2 alpha{1.0, 0.0};
  Point2 B{-1.0, 1.0};
  Vec2 beta{0.0, -1.0};
  if (!o.input.empty()) {
    const Json j = load_json(o.input);
    if (!j.is_object()) fail(ErrorCode::kInvalidInput, "demo-illposed input must be an object");
    for (const char* key : {"A", "alpha", "B", "beta"}) {
      if (!j.contains(key)) fail(ErrorCode::kInvalidInput, std::string("missing field \"") + key + "\"");
    }
    A = point_from_json(j.at("A"));
    alpha = point_from_json(j.at("alpha"));
    B = point_from_json(j.at("B"));
    beta = point_from_json(j.at("beta"));
  }
  const PiecewiseCurve curve = illposed_demo(A, alpha, B, beta, o.radius);
  const Vec2 a = normalized(alpha);
  const Vec2 b = normalized(beta);

  Json rejected{{"rejected", false}, {"code", nullptr}};
  try {
    (void)instance_from_tangents(A, B, alpha, beta);
  } catch (const Error& e) {
    rejected = Json{{"rejected", true}, {"code", std::string(to_string(e.code()))}};
  }
  const Json result{
      {"radius", round15(o.radius)},
      {"length", round15(curve.length())},
      {"maxCurvature", round15(max_curvature(curve))},
      {"endpointA_residual", round15(distance(curve.start_point(), A))},
      {"endpointB_residual", round15(distance(curve.end_point(), B))},
      {"tangentA_residual", round15(std::abs(oriented_angle(a, curve.start_tangent()).value()))},
      {"tangentB_residual", round15(std::abs(oriented_angle(b, curve.end_tangent()).value()))},
      {"normalizedConstruction", rejected},
      {"curve", curve_to_json(curve)}};
  write_json(result, o.output, out);
  return kExitOk;
}

void error_object(std::ostream& err, std::string_view code, const std::string& message) {
  err << dump_json(Json{{"error", {{"code", std::string(code)}, {"message", message}}}}, -1) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"min-max curvature curve synthesis", "mmc"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "instance / curve JSON: path or inline");
    sub->add_option("--output", o.output, "output path (stdout when omitted)");
  };
  CLI::App* solve = app.add_subcommand("solve", "optimal curve for an instance");
  add_io(solve);
  solve->add_option("--svg", o.svg, "also write an SVG drawing");
  CLI::App* verify = app.add_subcommand("verify", "membership report and certificate");
  add_io(verify);
  verify->add_option("--samples", o.samples, "samples per certificate check");
  CLI::App* sweep = app.add_subcommand("sweep", "composite family sweep");
  add_io(sweep);
  sweep->add_option("--grid", o.grid, "radius samples per axis");
  sweep->add_option("--d2-levels", o.d2_levels, "middle segment samples");
  sweep->add_option("--seed", o.seed, "random instance seed when --input is absent");
  CLI::App* compare = app.add_subcommand("compare", "quadratic Bezier baseline");
  add_io(compare);
  CLI::App* exp = app.add_subcommand("export", "SVG export with optional offsets");
  add_io(exp);
  exp->add_option("--svg", o.svg, "SVG path (same as --output)");
  exp->add_option("--offset", o.offset, "offset distance");
  CLI::App* demo = app.add_subcommand("demo-illposed", "segment-arc-segment curves for reflex data");
  add_io(demo);
  demo->add_option("--radius", o.radius, "arc radius")->required();

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    error_object(err, to_string(ErrorCode::kInvalidInput), e.what());
    return kExitValidation;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    if (exp->parsed()) return cmd_export(o, out);
    return cmd_illposed(o, out);
  } catch (const Error& e) {
    error_object(err, to_string(e.code()), e.what());
    return e.code() == ErrorCode::kInternalError ? kExitInternal : kExitValidation;
  } catch (const Json::exception& e) {
    error_object(err, to_string(ErrorCode::kInvalidInput), e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    error_object(err, to_string(ErrorCode::kInternalError), e.what());
    return kExitInternal;
  }
}

}  // namespace mmc::cli
