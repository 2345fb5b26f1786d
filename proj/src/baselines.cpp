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

#include "mmc/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mmc/error.hpp"
#include "mmc/optimal.hpp"

namespace mmc {

Point2 QuadraticBezier::point(double t) const noexcept {
  const double u = 1.0 - t;
  return p0 * (u * u) + p1 * (2.0 * u * t) + p2 * (t * t);
}

Vec2 QuadraticBezier::derivative(double t) const noexcept {
  return ((p1 - p0) * (1.0 - t) + (p2 - p1) * t) * 2.0;
}

double QuadraticBezier::curvature(double t) const noexcept {
  const Vec2 d = derivative(t);
  const double speed = norm(d);
  return std::abs(cross(d, second_derivative())) / (speed * speed * speed);
}

QuadraticBezier bezier_for(const ProblemInstance& inst) noexcept {
  return {inst.A(), inst.O(), inst.B()};
}

BezierRadius bezier_min_radius(const QuadraticBezier& b) {
  const Vec2 first = b.p1 - b.p0;
  const Vec2 second = b.p2 - b.p1;
  const Vec2 change = second - first;
  const double k = std::abs(4.0 * cross(first, second));
  const double scale = std::max(norm(first), norm(second));
  BezierRadius r;
  if (!(scale > 0.0) || k <= 1e-14 * scale * scale) {
    r.infinite = true;
    r.r_min = std::numeric_limits<double>::infinity();
    return r;
  }
  const double cc = dot(change, change);
  r.t_star = cc > 0.0 ? std::clamp(-dot(first, change) / cc, 0.0, 1.0) : 0.0;
  const double speed = norm(b.derivative(r.t_star));
  r.r_min = speed * speed * speed / k;
  return r;
}

std::vector<Point2> sample_bezier(const QuadraticBezier& b, int n) {
  if (n < 1) fail(ErrorCode::kInvalidInput, "sample count must be at least 1");
  std::vector<Point2> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out.push_back(b.point(static_cast<double>(k) / n));
  return out;
}

ComparisonReport compare_report(const ProblemInstance& inst) {
  ComparisonReport rep;
  rep.optimal_min_radius = radius_Ra(inst);
  const BezierRadius br = bezier_min_radius(bezier_for(inst));
  if (!br.infinite) {
    rep.bezier_min_radius = br.r_min;
    rep.bezier_t_star = br.t_star;
    rep.improvement_ratio = rep.optimal_min_radius / br.r_min;
  }
  return rep;
}

}  // namespace mmc
