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

// The optimal curve J(O, A, B): one counterclockwise arc of radius R_a that
// turns by the full angle Omega, plus one straight segment of length
// |OA - OB|. The arc sits at the endpoint nearer to O.

#pragma once

#include "mmc/curve.hpp"
#include "mmc/problem.hpp"

namespace mmc {

struct OptimalSolution {
  PiecewiseCurve curve;
  double radius = 0.0;        // R_a
  Point2 arc_center;
  double arc_sweep = 0.0;     // equals Omega
  double segment_length = 0.0;
  bool arc_first = true;      // OA <= OB: the arc starts at A

  /// Length of the circular part, R_a * Omega.
  [[nodiscard]] double arc_length() const noexcept { return radius * arc_sweep; }
};

/// R_a = min(OA, OB) * tan((pi - Omega) / 2): radius of the circle inscribed
/// in the angle AOB and tangent to the tangent line at the nearer endpoint.
double radius_Ra(const ProblemInstance& inst);

/// Builds J(O, A, B), traversed from A to B in the normalized orientation.
/// Throws InternalError if the construction does not close on B.
OptimalSolution synthesize(const ProblemInstance& inst);

struct TangencyResult {
  double radius = 0.0;
  Point2 center;
  Point2 tangent_point_near;   // tangency on the line through the nearer endpoint
  Point2 tangent_point_other;  // tangency on the other tangent line
  int iterations = 0;
};

/// Independent numerical construction of the R_a circle: bisection on the
/// center position along the interior bisector of angle AOB until the
/// perpendicular foot on the nearer tangent line hits the nearer endpoint.
TangencyResult tangency_oracle(const ProblemInstance& inst);

/// Segment - arc(R) - segment curve joining (A, alpha) to (B, beta) when the
/// data violate 0 < angle(alpha, beta) < pi. The arc turns counterclockwise
/// by angle(alpha, beta) + 2 pi, so R can be made arbitrarily large.
/// Throws InvalidInput for well-posed data, DegenerateInput when the
/// tangents are parallel or R is too small for non-negative segments.
PiecewiseCurve illposed_demo(const Point2& A, const Vec2& alpha, const Point2& B,
                             const Vec2& beta, double R);

}  // namespace mmc
