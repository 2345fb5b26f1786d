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

// Quadratic Bezier (parabola) baseline with control points A, O, B.

#pragma once

#include <optional>
#include <vector>

#include "mmc/geom.hpp"
#include "mmc/problem.hpp"

namespace mmc {

struct QuadraticBezier {
  Point2 p0;
  Point2 p1;
  Point2 p2;

  [[nodiscard]] Point2 point(double t) const noexcept;
  [[nodiscard]] Vec2 derivative(double t) const noexcept;
  [[nodiscard]] Vec2 second_derivative() const noexcept { return (p2 - p1 * 2.0 + p0) * 2.0; }
  /// Unsigned curvature |B' x B''| / |B'|^3.
  [[nodiscard]] double curvature(double t) const noexcept;
};

/// Control polygon A, O, B of the instance.
QuadraticBezier bezier_for(const ProblemInstance& inst) noexcept;

struct BezierRadius {
  double r_min = 0.0;      // +inf when the control points are collinear
  double t_star = 0.0;
  bool infinite = false;
};

/// Minimum radius of curvature over t in [0, 1]. B' x B'' is constant for a
/// quadratic, so the minimum is at the minimizer of |B'(t)|^2 clamped to [0, 1].
BezierRadius bezier_min_radius(const QuadraticBezier& b);

/// n + 1 points at equal parameter spacing.
std::vector<Point2> sample_bezier(const QuadraticBezier& b, int n);

struct ComparisonReport {
  std::optional<double> bezier_min_radius;  // absent for a degenerate Bezier
  double bezier_t_star = 0.0;
  double optimal_min_radius = 0.0;          // R_a
  std::optional<double> improvement_ratio;  // R_a / bezier_min_radius
};

ComparisonReport compare_report(const ProblemInstance& inst);

}  // namespace mmc
