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

// Boundary data of the min-max curvature problem: endpoints A and B, the
// apex O where the two tangent lines meet, unit tangents alpha (A -> O) and
// beta (O -> B), and the turning angle Omega = angle(alpha, beta) in (0, pi).

#pragma once

#include "mmc/geom.hpp"

namespace mmc {

/// Relative distance tolerance; absolute tolerance is this times the scene diameter.
inline constexpr double kDistRelTol = 1e-9;

class ProblemInstance {
 public:
  [[nodiscard]] const Point2& A() const noexcept { return a_; }
  [[nodiscard]] const Point2& B() const noexcept { return b_; }
  [[nodiscard]] const Point2& O() const noexcept { return o_; }
  [[nodiscard]] const Vec2& alpha() const noexcept { return alpha_; }
  [[nodiscard]] const Vec2& beta() const noexcept { return beta_; }
  [[nodiscard]] PrincipalAngle omega() const noexcept { return omega_; }
  [[nodiscard]] bool symmetric() const noexcept { return symmetric_; }

  /// True when the caller's data turned clockwise and A/B were swapped so
  /// that Omega > 0. Curves built for this instance must be reversed before
  /// being reported in the caller's orientation.
  [[nodiscard]] bool reversed() const noexcept { return reversed_; }

  [[nodiscard]] double OA() const noexcept { return distance(o_, a_); }
  [[nodiscard]] double OB() const noexcept { return distance(o_, b_); }

  /// Largest pairwise distance among O, A, B.
  [[nodiscard]] double diameter() const noexcept;
  /// Absolute distance tolerance for this scene.
  [[nodiscard]] double eps_dist() const noexcept { return kDistRelTol * diameter(); }

  /// Frame (A, alpha, k) used by the closed forms.
  [[nodiscard]] Frame frame() const { return Frame(a_, alpha_); }

 private:
  ProblemInstance() = default;
  friend ProblemInstance make_instance(const Point2&, const Point2&, const Point2&);

  Point2 a_, b_, o_;
  Vec2 alpha_, beta_;
  PrincipalAngle omega_;
  bool symmetric_ = false;
  bool reversed_ = false;
};

/// Builds an instance from the apex and the two endpoints.
/// Clockwise data (Omega in (-pi, 0)) is reversed so that Omega lies in (0, pi).
/// Throws DegenerateInput for coincident points and IllPosedAngle when the
/// tangent lines are collinear (Omega near 0 or pi).
ProblemInstance make_instance(const Point2& O, const Point2& A, const Point2& B);

/// Builds an instance from endpoints and tangents; O is the intersection of
/// the two tangent lines. Throws IllPosedAngle for parallel tangents and
/// NoAdmissibleCurve when A + u0 alpha = O = B - v0 beta has u0 <= 0 or v0 <= 0.
ProblemInstance instance_from_tangents(const Point2& A, const Point2& B,
                                       const Vec2& alpha, const Vec2& beta);

/// Maps the instance through p -> scale * R(rotation) p + translation.
ProblemInstance similarity_transform(const ProblemInstance& inst, PrincipalAngle rotation,
                                     double scale, const Vec2& translation);

/// Mirror image traversed backwards: A' = M(B), B' = M(A), O' = M(O) with M
/// the reflection across the line through O along alpha. Omega is preserved
/// and OA' = OB, so any instance can be brought to the OA <= OB case.
ProblemInstance mirrored_reverse(const ProblemInstance& inst);

/// Reflection used by mirrored_reverse.
Point2 mirror_point(const ProblemInstance& inst, const Point2& p) noexcept;

}  // namespace mmc
