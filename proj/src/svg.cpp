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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <variant>

#include "mmc/offsets.hpp"

namespace mmc {

std::string format_svg_number(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
  std::string s(buf, res.ptr);
  if (s == "-0") s = "0";
  return s;
}

namespace {

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(const Point2& p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  [[nodiscard]] bool empty() const { return min_x > max_x; }
};

void add_bounds(Box& box, const Primitive& p) {
  box.add(start_point(p));
  box.add(end_point(p));
  if (const auto* a = std::get_if<Arc>(&p)) {
    // Axis-extreme points swept by the arc.
    const double lo = std::min(a->start_angle.value(), a->start_angle.value() + a->sweep);
    const double hi = std::max(a->start_angle.value(), a->start_angle.value() + a->sweep);
    for (double k = std::ceil(lo / (kPi / 2.0)); k * (kPi / 2.0) <= hi; k += 1.0) {
      box.add(a->center + unit_vector(k * (kPi / 2.0)) * a->radius);
    }
  }
}

std::string point_str(const Point2& p) {
  return format_svg_number(p.x) + " " + format_svg_number(-p.y);
}

void append_arc(std::string& d, const Arc& a) {
  // Arcs over half a turn are split so the large-arc flag is never needed.
  const int pieces = std::abs(a.sweep) > kPi ? 2 : 1;
  const std::string r = format_svg_number(a.radius);
  // Counterclockwise in model space is clockwise after the y flip.
  const char* sweep_flag = a.sweep > 0.0 ? "0" : "1";
  for (int i = 1; i <= pieces; ++i) {
    const double theta = a.start_angle.value() + a.sweep * i / pieces;
    const Point2 end = a.center + unit_vector(theta) * a.radius;
    d += " A " + r + " " + r + " 0 0 " + sweep_flag + " " + point_str(end);
  }
}

}  // namespace

std::string to_svg(std::span<const PiecewiseCurve> curves, const SvgStyle& style) {
  Box box;
  for (const auto& c : curves) {
    for (const auto& p : c.primitives()) add_bounds(box, p);
  }

  double vx = 0.0, vy = 0.0, vw = 1.0, vh = 1.0;
  if (!box.empty()) {
    const double w = box.max_x - box.min_x;
    const double h = box.max_y - box.min_y;
    const double side = std::max(w, h);
    const double margin = side > 0.0 ? 0.05 * side : 0.5;
    vx = box.min_x - margin;
    vy = -box.max_y - margin;
    vw = w + 2.0 * margin;
    vh = h + 2.0 * margin;
  }
  const double stroke = style.stroke_width * std::max(vw, vh);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
         format_svg_number(vx) + " " + format_svg_number(vy) + " " + format_svg_number(vw) + " " +
         format_svg_number(vh) + "\">\n";
  std::size_t index = 0;
  for (const auto& c : curves) {
    if (c.empty()) continue;
    std::string d = "M " + point_str(c.start_point());
    for (const auto& p : c.primitives()) {
      if (const auto* a = std::get_if<Arc>(&p)) {
        append_arc(d, *a);
      } else {
        d += " L " + point_str(end_point(p));
      }
    }
    const std::string& color =
        style.strokes.empty() ? std::string("#000000") : style.strokes[index % style.strokes.size()];
    out += "  <path d=\"" + d + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
           format_svg_number(stroke) + "\"/>\n";
    ++index;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace mmc
