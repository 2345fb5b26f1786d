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

// Dubins-type curves G(R) made of two counterclockwise arcs of radius R
// joined by a segment, the admissible radius set F = ]0, R_a], and the
// composite segment/arc families that compete with the optimal curve.

#pragma once

#include <cstddef>
#include <optional>

#include "mmc/curve.hpp"
#include "mmc/problem.hpp"

namespace mmc {

enum class DubinsCase { kInterior, kLimit };

struct DubinsCurve {
  double radius = 0.0;
  PiecewiseCurve curve;
  DubinsCase kind = DubinsCase::kInterior;
  double first_sweep = 0.0;   // turning on the arc tangent at A
  double second_sweep = 0.0;  // turning on the arc tangent at B
  double segment_length = 0.0;
};

/// Relative slack accepted above R_a.
inline constexpr double kRadiusSlack = 1e-12;

/// True iff 0 < R <= R_a (with kRadiusSlack relative slack).
bool in_F(const ProblemInstance& inst, double R);

/// Arc of radius R tangent to (OA) at A, arc of radius R tangent to (OB) at
/// B, joined by their common tangent segment. At R = R_a one arc vanishes
/// and the result is J(O, A, B). Throws InvalidInput for R <= 0 and NotInF
/// for R > R_a.
DubinsCurve dubins_G(const ProblemInstance& inst, double R);

struct CompositeOptions {
  double d2 = 0.0;                      // middle segment length (free parameter)
  std::optional<double> first_sweep;    // defaults to Omega / 2
};

/// Segment d1, arc (R1, sweep1), segment d2, arc (R2, sweep2), segment d3,
/// with sweep1 + sweep2 = Omega.
struct CompositeCurve {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double R1 = 0.0;
  double R2 = 0.0;
  double sweep1 = 0.0;
  double sweep2 = 0.0;
  PiecewiseCurve curve;

  /// Length up to the end of the second arc: d1 + l1 + d2 + l2.
  [[nodiscard]] double hat_length() const noexcept { return d1 + R1 * sweep1 + d2 + R2 * sweep2; }
};

/// Clamp threshold (relative to the scene diameter) separating rounding
/// noise from genuinely negative segment lengths.
inline constexpr double kNegativeLengthTol = 1e-9;

/// Solves the endpoint condition for (d1, d3) given R1, R2 and d2. The
/// heading sequence is fixed, so the displacement is linear in the segment
/// lengths. Returns nullopt when d1 or d3 would be negative.
std::optional<CompositeCurve> composite_solve(const ProblemInstance& inst, double R1, double R2,
                                              const CompositeOptions& options = {});

/// Two-segment family: segment d1, one arc (R, Omega), segment d3.
std::optional<CompositeCurve> single_arc_solve(const ProblemInstance& inst, double R);

struct SweepGrid {
  int n = 200;             // radius samples per axis
  double r_min = 0.2;      // relative to R_a
  double r_max = 3.0;      // relative to R_a
  int d2_levels = 1;       // middle-segment samples in [0, d2_max * min(OA, OB)]
  double d2_max = 0.5;
  bool include_single_arc = true;
  bool diagonal_only = false;  // only R1 == R2
};

struct SweepCandidate {
  int family = 4;  // 2: single arc, 4: two arcs
  double R1 = 0.0;
  double R2 = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double max_curvature = 0.0;
};

struct SweepReport {
  double min_max_curvature = 0.0;  // +inf when nothing is feasible
  SweepCandidate argmin;
  double margin = 0.0;             // min_max_curvature - 1 / R_a
  double optimal_curvature = 0.0;  // 1 / R_a
  double radius_step = 0.0;        // grid spacing in radius
  int grid_n = 0;
  int d2_levels = 0;
  std::size_t evaluated = 0;
  std::size_t feasible_single_arc = 0;
  std::size_t feasible_two_arc = 0;

  [[nodiscard]] std::size_t feasible() const noexcept { return feasible_single_arc + feasible_two_arc; }
};

/// Enumerates the composite families over the grid and returns the smallest
/// maximum curvature found among feasible members. Ties are broken towards
/// the smaller larger-radius, then the smaller d2, so the result does not
/// depend on evaluation order. Throws InvalidInput for an empty grid.
SweepReport family_sweep(const ProblemInstance& inst, const SweepGrid& grid = {});

}  // namespace mmc
