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

#include "mmc/optimal.hpp"

#include <algorithm>
#include <cmath>

#include "mmc/error.hpp"

namespace mmc {

double radius_Ra(const ProblemInstance& inst) {
  return std::min(inst.OA(), inst.OB()) * std::tan((kPi - inst.omega().value()) / 2.0);
}

OptimalSolution synthesize(const ProblemInstance& inst) {
  OptimalSolution sol;
  sol.radius = radius_Ra(inst);
  sol.arc_sweep = inst.omega().value();
  sol.arc_first = inst.symmetric() || inst.OA() <= inst.OB();
  sol.segment_length = inst.symmetric() ? 0.0 : std::abs(inst.OA() - inst.OB());

  CurveBuilder b(inst.A(), inst.alpha());
  if (sol.arc_first) {
    sol.arc_center = inst.A() + rot90(inst.alpha()) * sol.radius;
    b.arc(sol.radius, sol.arc_sweep).line(sol.segment_length);
  } else {
    sol.arc_center = inst.B() + rot90(inst.beta()) * sol.radius;
    b.line(sol.segment_length).arc(sol.radius, sol.arc_sweep);
  }
  sol.curve = b.build();

  if (distance(sol.curve.end_point(), inst.B()) > inst.eps_dist()) {
    fail(ErrorCode::kInternalError, "optimal curve does not close on B");
  }
  return sol;
}

TangencyResult tangency_oracle(const ProblemInstance& inst) {
  const Vec2 to_a = normalized(inst.A() - inst.O());
  const Vec2 to_b = normalized(inst.B() - inst.O());
  const Vec2 bisector = normalized(to_a + to_b);
  const bool a_near = inst.OA() <= inst.OB();
  const Vec2 near_dir = a_near ? to_a : to_b;
  const Vec2 other_dir = a_near ? to_b : to_a;
  const Point2 near_point = a_near ? inst.A() : inst.B();

  // Signed position of the perpendicular foot relative to the near endpoint;
  // increasing in t.
  const auto foot_offset = [&](double t) {
    const Point2 c = inst.O() + bisector * t;
    return dot(c - near_point, near_dir);
  };

  double lo = 0.0;
  double hi = inst.diameter();
  int guard = 0;
  while (foot_offset(hi) < 0.0) {
    hi *= 2.0;
    if (++guard > 200) fail(ErrorCode::kInternalError, "tangency bracket not found");
  }

  TangencyResult r;
  while (hi - lo > 1e-14 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (foot_offset(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (++r.iterations > 400) fail(ErrorCode::kInternalError, "tangency bisection did not converge");
  }
  const double t = 0.5 * (lo + hi);
  r.center = inst.O() + bisector * t;
  r.radius = std::abs(cross(r.center - inst.O(), near_dir));
  r.tangent_point_near = inst.O() + near_dir * dot(r.center - inst.O(), near_dir);
  r.tangent_point_other = inst.O() + other_dir * dot(r.center - inst.O(), other_dir);
  return r;
}

PiecewiseCurve illposed_demo(const Point2& A, const Vec2& alpha, const Point2& B,
                             const Vec2& beta, double R) {
  if (!is_finite(A) || !is_finite(B)) fail(ErrorCode::kInvalidInput, "non-finite endpoint");
  if (!(R > 0.0) || !std::isfinite(R)) fail(ErrorCode::kInvalidInput, "radius must be positive");
  const Vec2 a = normalized(alpha);
  const Vec2 b = normalized(beta);
  const double omega = oriented_angle(a, b).value();
  if (std::abs(omega) <= kAngleTol || std::abs(omega) >= kPi - kAngleTol) {
    fail(ErrorCode::kDegenerateInput, "parallel tangents: no segment-arc-segment construction");
  }
  if (omega > 0.0) {
    fail(ErrorCode::kInvalidInput, "data are well posed (0 < Omega < pi); use synthesize");
  }
  const double sweep = omega + kTwoPi;
  const Vec2 end_heading = rotate(a, sweep);
  const Vec2 chord = rot90(a - end_heading) * R;

  // d1 a + d3 b = B - A - chord
  const Vec2 rhs = B - A - chord;
  const double det = cross(a, b);
  const double d1 = cross(rhs, b) / det;
  const double d3 = cross(a, rhs) / det;
  const double tol = kDistRelTol * std::max({1.0, distance(A, B), R});
  if (d1 < -tol || d3 < -tol) {
    fail(ErrorCode::kDegenerateInput, "radius too small for this data");
  }
  CurveBuilder builder(A, a);
  builder.line(std::max(d1, 0.0)).arc(R, sweep).line(std::max(d3, 0.0));
  return builder.build();
}

}  // namespace mmc
