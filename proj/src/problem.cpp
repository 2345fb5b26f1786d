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

#include "mmc/problem.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "mmc/error.hpp"

namespace mmc {

namespace {

double diameter_of(const Point2& a, const Point2& b, const Point2& c) noexcept {
  return std::max({distance(a, b), distance(b, c), distance(a, c)});
}

void require_finite(const Point2& p, const char* name) {
  if (!is_finite(p)) fail(ErrorCode::kInvalidInput, std::string(name) + " is not finite");
}

}  // namespace

double ProblemInstance::diameter() const noexcept { return diameter_of(a_, b_, o_); }

ProblemInstance make_instance(const Point2& O, const Point2& A, const Point2& B) {
  require_finite(O, "O");
  require_finite(A, "A");
  require_finite(B, "B");

  const double eps = kDistRelTol * diameter_of(O, A, B);
  if (!(eps > 0.0) || distance(O, A) <= eps || distance(O, B) <= eps || distance(A, B) <= eps) {
    fail(ErrorCode::kDegenerateInput, "O, A and B must be pairwise distinct");
  }

  ProblemInstance inst;
  inst.o_ = O;
  inst.a_ = A;
  inst.b_ = B;
  inst.alpha_ = normalized(O - A);
  inst.beta_ = normalized(B - O);
  double omega = oriented_angle(inst.alpha_, inst.beta_).value();

  if (std::abs(omega) <= kAngleTol || std::abs(omega) >= kPi - kAngleTol) {
    fail(ErrorCode::kIllPosedAngle, "tangent lines are collinear (Omega is a multiple of pi)");
  }
  if (omega < 0.0) {
    // Traverse backwards: the turning angle changes sign.
    std::swap(inst.a_, inst.b_);
    inst.alpha_ = normalized(O - inst.a_);
    inst.beta_ = normalized(inst.b_ - O);
    omega = oriented_angle(inst.alpha_, inst.beta_).value();
    inst.reversed_ = true;
  }
  inst.omega_ = PrincipalAngle(omega);
  inst.symmetric_ = std::abs(inst.OA() - inst.OB()) <= eps;
  return inst;
}

ProblemInstance instance_from_tangents(const Point2& A, const Point2& B,
                                       const Vec2& alpha, const Vec2& beta) {
  require_finite(A, "A");
  require_finite(B, "B");
  const Vec2 a = normalized(alpha);
  const Vec2 b = normalized(beta);
  const double det = cross(a, b);
  if (std::abs(det) <= kAngleTol) {
    fail(ErrorCode::kIllPosedAngle, "tangent lines are parallel");
  }
  // A + u0 a = B - v0 b  <=>  u0 a + v0 b = B - A.
  const Vec2 rhs = B - A;
  const double u0 = cross(rhs, b) / det;
  const double v0 = cross(a, rhs) / det;
  const double eps = kDistRelTol * std::max(1.0, distance(A, B));
  if (u0 <= eps || v0 <= eps) {
    fail(ErrorCode::kNoAdmissibleCurve,
         "tangent at A or B points away from the tangent-line intersection");
  }
  return make_instance(A + a * u0, A, B);
}

ProblemInstance similarity_transform(const ProblemInstance& inst, PrincipalAngle rotation,
                                     double scale, const Vec2& translation) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    fail(ErrorCode::kInvalidInput, "scale must be positive");
  }
  const auto map = [&](const Point2& p) { return rotate(p, rotation.value()) * scale + translation; };
  // Keep the caller-facing orientation: undo the normalization swap first.
  const Point2 a = inst.reversed() ? inst.B() : inst.A();
  const Point2 b = inst.reversed() ? inst.A() : inst.B();
  return make_instance(map(inst.O()), map(a), map(b));
}

Point2 mirror_point(const ProblemInstance& inst, const Point2& p) noexcept {
  const Vec2 d = p - inst.O();
  const Vec2& u = inst.alpha();
  return inst.O() + u * dot(d, u) - rot90(u) * dot(d, rot90(u));
}

ProblemInstance mirrored_reverse(const ProblemInstance& inst) {
  return make_instance(inst.O(), mirror_point(inst, inst.B()), mirror_point(inst, inst.A()));
}

}  // namespace mmc
