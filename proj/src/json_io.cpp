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

#include "mmc/json_io.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <variant>

#include "mmc/error.hpp"

namespace mmc {

double round15(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 14);
  double out = v;
  std::from_chars(buf, res.ptr, out);
  return out;
}

namespace {

void format_float(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  if (v == 0.0) v = 0.0;  // drop the sign of zero
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 15);
  std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));
  out.append(text);
  if (text.find_first_of(".en") == std::string_view::npos) out += ".0";
}

void dump_into(std::string& out, const Json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(out, value, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump_into(out, value, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      format_float(out, j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

Json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round15(v);
}

Json opt_num(const std::optional<double>& v) { return v ? num(*v) : Json(nullptr); }

double number_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    fail(ErrorCode::kInvalidInput, std::string("missing numeric field \"") + key + "\"");
  }
  const double v = j.at(key).get<double>();
  if (!std::isfinite(v)) fail(ErrorCode::kInvalidInput, std::string("non-finite field \"") + key + "\"");
  return v;
}

Point2 point_field(const Json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorCode::kInvalidInput, std::string("missing field \"") + key + "\"");
  return point_from_json(j.at(key));
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_into(out, j, indent, 0);
  return out;
}

Point2 point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(ErrorCode::kInvalidInput, "a point must be an array of two numbers");
  }
  return make_vec2(j[0].get<double>(), j[1].get<double>());
}

Json point_to_json(const Point2& p) { return Json::array({num(p.x), num(p.y)}); }

ProblemInstance instance_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::kInvalidInput, "instance must be a JSON object");
  const bool has_o = j.contains("O");
  const bool has_tangents = j.contains("alpha") || j.contains("beta");
  if (has_o == has_tangents) {
    fail(ErrorCode::kInvalidInput, "instance needs exactly one of \"O\" or (\"alpha\", \"beta\")");
  }
  const Point2 a = point_field(j, "A");
  const Point2 b = point_field(j, "B");
  if (has_o) return make_instance(point_field(j, "O"), a, b);
  return instance_from_tangents(a, b, point_field(j, "alpha"), point_field(j, "beta"));
}

Json instance_to_json(const ProblemInstance& inst) {
  const Point2& a = inst.reversed() ? inst.B() : inst.A();
  const Point2& b = inst.reversed() ? inst.A() : inst.B();
  return Json{{"A", point_to_json(a)}, {"B", point_to_json(b)}, {"O", point_to_json(inst.O())}};
}

PiecewiseCurve curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("primitives") || !j.at("primitives").is_array()) {
    fail(ErrorCode::kInvalidInput, "curve must be an object with a \"primitives\" array");
  }
  std::vector<Primitive> prims;
  for (const auto& p : j.at("primitives")) {
    if (!p.is_object() || !p.contains("type") || !p.at("type").is_string()) {
      fail(ErrorCode::kInvalidInput, "primitive needs a \"type\"");
    }
    const std::string type = p.at("type").get<std::string>();
    if (type == "segment") {
      prims.emplace_back(Segment{point_field(p, "start"), point_field(p, "end")});
    } else if (type == "arc") {
      prims.emplace_back(Arc{point_field(p, "center"), number_field(p, "radius"),
                             PrincipalAngle(number_field(p, "startAngle")), number_field(p, "sweep")});
    } else {
      fail(ErrorCode::kInvalidInput, "unknown primitive type \"" + type + "\"");
    }
  }
  return PiecewiseCurve(std::move(prims));
}

Json curve_to_json(const PiecewiseCurve& curve) {
  Json prims = Json::array();
  for (const auto& p : curve.primitives()) {
    if (const auto* s = std::get_if<Segment>(&p)) {
      prims.push_back({{"type", "segment"}, {"start", point_to_json(s->start)}, {"end", point_to_json(s->end)}});
    } else {
      const Arc& a = std::get<Arc>(p);
      prims.push_back({{"type", "arc"},
                       {"center", point_to_json(a.center)},
                       {"radius", num(a.radius)},
                       {"startAngle", num(a.start_angle.value())},
                       {"sweep", num(a.sweep)}});
    }
  }
  return Json{{"primitives", prims}};
}

Json solution_to_json(const OptimalSolution& sol, const ProblemInstance& inst) {
  const bool rev = inst.reversed();
  const PiecewiseCurve shown = rev ? reverse(sol.curve) : sol.curve;
  const bool arc_first = inst.symmetric() ? true : (rev ? !sol.arc_first : sol.arc_first);
  return Json{{"instance", instance_to_json(inst)},
              {"R_a", num(sol.radius)},
              {"segmentLength", num(sol.segment_length)},
              {"arcCenter", point_to_json(sol.arc_center)},
              {"arcSweep", num(rev ? -sol.arc_sweep : sol.arc_sweep)},
              {"arcFirst", arc_first},
              {"omega", num(inst.omega().value())},
              {"reversed", rev},
              {"symmetric", inst.symmetric()},
              {"maxCurvature", num(max_curvature(sol.curve))},
              {"length", num(sol.curve.length())},
              {"curve", curve_to_json(shown)}};
}

Json membership_to_json(const MembershipReport& r) {
  return Json{{"endpointA_residual", num(r.endpoint_a_residual)},
              {"endpointB_residual", num(r.endpoint_b_residual)},
              {"tangentA_residual", num(r.tangent_a_residual)},
              {"tangentB_residual", num(r.tangent_b_residual)},
              {"unitSpeed", r.unit_speed},
              {"tangentContinuous", r.tangent_continuous},
              {"curvatureNonnegative", r.curvature_nonnegative},
              {"phiMonotone", r.phi_monotone},
              {"phiRangeOK", r.phi_range_ok},
              {"inE", r.in_e}};
}

Json certificate_to_json(const Certificate& c) {
  return Json{{"zeta0", opt_num(c.zeta0)},
              {"supportMinResidual", num(c.support_min_residual)},
              {"thetaPhiMaxExcess", opt_num(c.theta_phi_max_excess)},
              {"u0", num(c.u0)},
              {"v0", num(c.v0)},
              {"uvPositive", c.uv_positive},
              {"e", num(c.e)}};
}

Json sweep_to_json(const SweepReport& r) {
  const auto& a = r.argmin;
  return Json{{"minMaxCurvature", num(r.min_max_curvature)},
              {"argmin",
               {{"family", a.family},
                {"R1", num(a.R1)},
                {"R2", num(a.R2)},
                {"d1", num(a.d1)},
                {"d2", num(a.d2)},
                {"d3", num(a.d3)}}},
              {"margin", num(r.margin)},
              {"optimalCurvature", num(r.optimal_curvature)},
              {"gridSize", Json::array({r.grid_n, r.grid_n})},
              {"d2Levels", r.d2_levels},
              {"evaluated", r.evaluated},
              {"feasible", r.feasible()}};
}

Json comparison_to_json(const ComparisonReport& r) {
  return Json{{"bezierMinRadius", opt_num(r.bezier_min_radius)},
              {"bezierTStar", r.bezier_min_radius ? num(r.bezier_t_star) : Json(nullptr)},
              {"optimalMinRadius", num(r.optimal_min_radius)},
              {"improvementRatio", opt_num(r.improvement_ratio)}};
}

}  // namespace mmc
