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

// Exact piecewise arc/segment curves parameterized by arc length.
//
// Sign convention: positive curvature turns counterclockwise, i.e. the
// heading increases with s. Arcs carry a signed sweep.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "mmc/geom.hpp"
#include "mmc/problem.hpp"

namespace mmc {

struct Segment {
  Point2 start;
  Point2 end;
};

struct Arc {
  Point2 center;
  double radius = 1.0;
  PrincipalAngle start_angle;  // polar angle of the start point about the center
  double sweep = 0.0;          // signed; > 0 is counterclockwise
};

using Primitive = std::variant<Segment, Arc>;

double length(const Primitive& p) noexcept;
Point2 start_point(const Primitive& p) noexcept;
Point2 end_point(const Primitive& p) noexcept;
Vec2 start_tangent(const Primitive& p);
Vec2 end_tangent(const Primitive& p);
/// Signed heading change across the primitive (0 for segments).
double turning(const Primitive& p) noexcept;
/// Signed curvature: 0 on segments, +-1/radius on arcs.
double signed_curvature(const Primitive& p) noexcept;

struct CurveSample {
  double s = 0.0;
  Point2 point;
  Vec2 tangent;
  double curvature = 0.0;
};

/// Exact evaluation at arc length `local_s` from the primitive start.
CurveSample evaluate_primitive(const Primitive& p, double local_s) noexcept;

enum class JointCheck {
  kTangent,   // G1: positions and tangent directions must match at joints
  kPosition,  // positions only; used for degenerate offsets with cusps
};

/// Ordered chain of primitives. Construction drops zero-length pieces and
/// rejects chains whose joints violate the requested continuity
/// (position gap 1e-9 relative to the scene extent, tangent gap 1e-9 rad).
class PiecewiseCurve {
 public:
  PiecewiseCurve() = default;
  explicit PiecewiseCurve(std::vector<Primitive> primitives,
                          JointCheck check = JointCheck::kTangent);

  [[nodiscard]] std::span<const Primitive> primitives() const noexcept { return primitives_; }
  /// Cumulative arc lengths; breakpoints()[i] is where primitive i starts.
  /// Has size() + 1 entries when non-empty.
  [[nodiscard]] std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  [[nodiscard]] double length() const noexcept { return length_; }
  [[nodiscard]] std::size_t size() const noexcept { return primitives_.size(); }
  [[nodiscard]] bool empty() const noexcept { return primitives_.empty(); }
  [[nodiscard]] bool tangent_continuous() const noexcept { return tangent_continuous_; }

  [[nodiscard]] Point2 start_point() const;
  [[nodiscard]] Point2 end_point() const;
  [[nodiscard]] Vec2 start_tangent() const;
  [[nodiscard]] Vec2 end_tangent() const;

  /// Index of the primitive containing arc length s (right-continuous,
  /// the last primitive is closed). `s` must already lie in [0, length()].
  [[nodiscard]] std::size_t index_at(double s) const noexcept;

 private:
  std::vector<Primitive> primitives_;
  std::vector<double> breakpoints_;
  double length_ = 0.0;
  bool tangent_continuous_ = true;
};

/// Turtle-style constructor of G1 chains.
class CurveBuilder {
 public:
  CurveBuilder(const Point2& start, const Vec2& heading);

  CurveBuilder& line(double length);
  /// Arc of `radius` turning by `sweep` radians (sign gives direction).
  CurveBuilder& arc(double radius, double sweep);

  [[nodiscard]] const Point2& position() const noexcept { return position_; }
  [[nodiscard]] Vec2 heading() const noexcept { return unit_vector(heading_angle_); }
  /// Total signed turning so far.
  [[nodiscard]] double turned() const noexcept { return heading_angle_ - initial_angle_; }

  [[nodiscard]] PiecewiseCurve build() const;

 private:
  Point2 position_;
  double initial_angle_ = 0.0;
  double heading_angle_ = 0.0;
  std::vector<Primitive> primitives_;
};

/// Point, unit tangent and signed curvature at arc length s.
/// Throws OutOfRange when s lies outside [0, L] by more than 1e-12 slack,
/// InvalidInput for an empty curve.
CurveSample evaluate(const PiecewiseCurve& curve, double s);

/// Continuous heading phi(s) relative to alpha: the initial tangent angle
/// plus accumulated signed sweeps. Never re-wrapped.
double heading(const PiecewiseCurve& curve, const ProblemInstance& inst, double s);

struct MembershipReport {
  double endpoint_a_residual = 0.0;
  double endpoint_b_residual = 0.0;
  double tangent_a_residual = 0.0;
  double tangent_b_residual = 0.0;  // |phi(L) - Omega|, not modulo 2 pi
  bool unit_speed = true;
  bool tangent_continuous = true;
  bool curvature_nonnegative = true;
  bool phi_monotone = true;
  bool phi_range_ok = true;  // phi(s) in [0, Omega]
  bool in_e = false;

  double position_tol = 0.0;
  double angle_tol = kAngleTol;
};

/// Checks every admissibility condition of `curve` for `inst`.
MembershipReport check_membership(const PiecewiseCurve& curve, const ProblemInstance& inst);

/// Largest |curvature| over the chain. Throws InvalidInput when empty.
double max_curvature(const PiecewiseCurve& curve);

/// n + 1 samples at equal arc-length spacing, both endpoints included.
std::vector<CurveSample> sample_polyline(const PiecewiseCurve& curve, int n);

/// Discrete curvature of an ordered point list: heading change of
/// consecutive chords divided by the mean chord length around each interior
/// point, linearly extrapolated at the two ends. Throws InvalidInput for
/// fewer than 3 points or repeated points.
std::vector<double> numeric_curvature(std::span<const Point2> points);

/// Same curve traversed from end to start (curvature signs flip).
PiecewiseCurve reverse(const PiecewiseCurve& curve);

/// Image of the curve under a similarity or reflection `map` with linear
/// scale factor `scale`. `orientation_preserving` is false for reflections.
PiecewiseCurve map_curve(const PiecewiseCurve& curve,
                         const std::function<Point2(const Point2&)>& map, double scale,
                         bool orientation_preserving);

/// Euclidean distance from p to the curve.
double distance_to(const PiecewiseCurve& curve, const Point2& p);

}  // namespace mmc
