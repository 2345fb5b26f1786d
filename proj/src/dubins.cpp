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

#include "mmc/dubins.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "mmc/error.hpp"
#include "mmc/optimal.hpp"

namespace mmc {

bool in_F(const ProblemInstance& inst, double R) {
  return R > 0.0 && R <= radius_Ra(inst) * (1.0 + kRadiusSlack);
}

DubinsCurve dubins_G(const ProblemInstance& inst, double R) {
  if (!(R > 0.0) || !std::isfinite(R)) fail(ErrorCode::kInvalidInput, "radius must be positive");
  const double ra = radius_Ra(inst);
  if (R > ra * (1.0 + kRadiusSlack)) fail(ErrorCode::kNotInF, "radius exceeds R_a");

  const double omega = inst.omega().value();
  const Point2 c1 = inst.A() + rot90(inst.alpha()) * R;
  const Point2 c2 = inst.B() + rot90(inst.beta()) * R;
  const Vec2 link = c2 - c1;
  const double link_len = norm(link);

  DubinsCurve out;
  out.radius = R;
  out.kind = R >= ra * (1.0 - kRadiusSlack) ? DubinsCase::kLimit : DubinsCase::kInterior;
  if (link_len <= inst.eps_dist()) {
    // Both arcs lie on the same circle (symmetric limit).
    out.first_sweep = omega;
  } else {
    double psi = oriented_angle(inst.alpha(), link / link_len).value();
    if (psi < -kAngleTol || psi > omega + kAngleTol) {
      fail(ErrorCode::kInternalError, "connecting segment heading outside [0, Omega]");
    }
    out.first_sweep = std::clamp(psi, 0.0, omega);
    out.segment_length = link_len;
  }
  out.second_sweep = omega - out.first_sweep;

  CurveBuilder b(inst.A(), inst.alpha());
  b.arc(R, out.first_sweep).line(out.segment_length).arc(R, out.second_sweep);
  out.curve = b.build();
  if (distance(out.curve.end_point(), inst.B()) > inst.eps_dist()) {
    fail(ErrorCode::kInternalError, "Dubins curve does not close on B");
  }
  return out;
}

namespace {

// Displacement of a counterclockwise arc of radius r turning from heading t0 to t1.
Vec2 arc_chord(double r, const Vec2& t0, const Vec2& t1) noexcept { return rot90(t0 - t1) * r; }

std::optional<CompositeCurve> solve_chain(const ProblemInstance& inst, double R1, double R2,
                                          double sweep1, double d2) {
  const double omega = inst.omega().value();
  const double sweep2 = omega - sweep1;
  const Vec2 t0 = inst.alpha();
  const Vec2 t1 = rotate(t0, sweep1);
  const Vec2 t2 = rotate(t0, omega);

  const Vec2 rhs = inst.B() - inst.A() - arc_chord(R1, t0, t1) - arc_chord(R2, t1, t2) - t1 * d2;
  const double det = cross(t0, t2);
  if (std::abs(det) <= 1e-15) fail(ErrorCode::kInternalError, "singular composite system");
  double d1 = cross(rhs, t2) / det;
  double d3 = cross(t0, rhs) / det;

  const double tol = kNegativeLengthTol * inst.diameter();
  if (d1 < -tol || d3 < -tol) return std::nullopt;
  d1 = std::max(d1, 0.0);
  d3 = std::max(d3, 0.0);

  CompositeCurve c{d1, d2, d3, R1, R2, sweep1, sweep2, {}};
  CurveBuilder b(inst.A(), t0);
  b.line(d1).arc(R1, sweep1).line(d2).arc(R2, sweep2).line(d3);
  c.curve = b.build();
  return c;
}

}  // namespace

std::optional<CompositeCurve> composite_solve(const ProblemInstance& inst, double R1, double R2,
                                              const CompositeOptions& options) {
  if (!(R1 > 0.0) || !(R2 > 0.0)) fail(ErrorCode::kInvalidInput, "radii must be positive");
  if (!(options.d2 >= 0.0)) fail(ErrorCode::kInvalidInput, "d2 must be non-negative");
  const double omega = inst.omega().value();
  const double sweep1 = options.first_sweep.value_or(omega / 2.0);
  if (!(sweep1 > 0.0 && sweep1 < omega)) {
    fail(ErrorCode::kInvalidInput, "first sweep must lie in (0, Omega)");
  }
  return solve_chain(inst, R1, R2, sweep1, options.d2);
}

std::optional<CompositeCurve> single_arc_solve(const ProblemInstance& inst, double R) {
  if (!(R > 0.0)) fail(ErrorCode::kInvalidInput, "radius must be positive");
  auto c = solve_chain(inst, R, R, inst.omega().value() / 2.0, 0.0);
  if (c) {
    CurveBuilder b(inst.A(), inst.alpha());
    b.line(c->d1).arc(R, inst.omega().value()).line(c->d3);
    c->curve = b.build();
  }
  return c;
}

namespace {

// Lexicographic order used to pick a unique argmin.
bool better(const SweepCandidate& a, const SweepCandidate& b) {
  const double scale = std::max(a.max_curvature, b.max_curvature);
  if (std::abs(a.max_curvature - b.max_curvature) > 1e-12 * scale) {
    return a.max_curvature < b.max_curvature;
  }
  return std::make_tuple(std::max(a.R1, a.R2), a.d2, -a.family, a.R1, a.d1) <
         std::make_tuple(std::max(b.R1, b.R2), b.d2, -b.family, b.R1, b.d1);
}

}  // namespace

SweepReport family_sweep(const ProblemInstance& inst, const SweepGrid& grid) {
  if (grid.n < 1 || grid.d2_levels < 1 || !(grid.r_min > 0.0) || grid.r_max < grid.r_min) {
    fail(ErrorCode::kInvalidInput, "empty sweep grid");
  }
  const double ra = radius_Ra(inst);
  const double d2_span = grid.d2_max * std::min(inst.OA(), inst.OB());

  SweepReport rep;
  rep.optimal_curvature = 1.0 / ra;
  rep.grid_n = grid.n;
  rep.d2_levels = grid.d2_levels;
  rep.radius_step = grid.n > 1 ? (grid.r_max - grid.r_min) * ra / (grid.n - 1) : 0.0;
  rep.min_max_curvature = std::numeric_limits<double>::infinity();
  bool have = false;

  const auto radius_at = [&](int i) {
    return grid.n > 1 ? ra * (grid.r_min + (grid.r_max - grid.r_min) * i / (grid.n - 1)) : ra * grid.r_min;
  };
  const auto consider = [&](int family, const CompositeCurve& c) {
    SweepCandidate cand{family, c.R1, c.R2, c.d1, c.d2, c.d3, max_curvature(c.curve)};
    if (!have || better(cand, rep.argmin)) {
      rep.argmin = cand;
      have = true;
    }
  };

  if (grid.include_single_arc) {
    for (int i = 0; i < grid.n; ++i) {
      ++rep.evaluated;
      if (auto c = single_arc_solve(inst, radius_at(i))) {
        ++rep.feasible_single_arc;
        consider(2, *c);
      }
    }
  }
  for (int k = 0; k < grid.d2_levels; ++k) {
    const double d2 = grid.d2_levels > 1 ? d2_span * k / (grid.d2_levels - 1) : 0.0;
    for (int i = 0; i < grid.n; ++i) {
      for (int j = 0; j < grid.n; ++j) {
        if (grid.diagonal_only && i != j) continue;
        ++rep.evaluated;
        CompositeOptions opt;
        opt.d2 = d2;
        if (auto c = composite_solve(inst, radius_at(i), radius_at(j), opt)) {
          ++rep.feasible_two_arc;
          consider(4, *c);
        }
      }
    }
  }

  if (have) rep.min_max_curvature = rep.argmin.max_curvature;
  rep.margin = rep.min_max_curvature - rep.optimal_curvature;
  return rep;
}

}  // namespace mmc
