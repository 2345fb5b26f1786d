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

#include "mmc/offsets.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "mmc/error.hpp"

namespace mmc {

namespace {

struct SideBuilder {
  std::vector<Primitive> prims;
  bool cusps = false;

  void add_arc(const Arc& base, double r, double eps) {
    if (r > eps) {
      prims.emplace_back(Arc{base.center, r, base.start_angle, base.sweep});
    } else if (r < -eps) {
      // The offset passes through the center: same angular motion on the
      // opposite side, traversed against the base tangent.
      prims.emplace_back(Arc{base.center, -r, PrincipalAngle(base.start_angle.value() + kPi), base.sweep});
      cusps = true;
    } else {
      cusps = true;  // collapses to a stationary point
    }
  }

  PiecewiseCurve build() {
    return PiecewiseCurve(std::move(prims), cusps ? JointCheck::kPosition : JointCheck::kTangent);
  }
};

}  // namespace

OffsetResult offset(const PiecewiseCurve& curve, double d) {
  if (!(d > 0.0) || !std::isfinite(d)) fail(ErrorCode::kInvalidInput, "offset distance must be positive");
  if (curve.empty()) fail(ErrorCode::kInvalidInput, "empty curve");
  const double eps = kDistRelTol * std::max(1.0, curve.length());

  OffsetResult out;
  out.distance = d;
  SideBuilder left;
  SideBuilder right;
  for (const auto& p : curve.primitives()) {
    if (const auto* s = std::get_if<Segment>(&p)) {
      const Vec2 n = rot90(normalized(s->end - s->start)) * d;
      left.prims.emplace_back(Segment{s->start + n, s->end + n});
      right.prims.emplace_back(Segment{s->start - n, s->end - n});
    } else {
      const Arc& a = std::get<Arc>(p);
      const double dir = a.sweep < 0.0 ? -1.0 : 1.0;
      const double r_left = a.radius - dir * d;
      const double r_right = a.radius + dir * d;
      if (std::min(r_left, r_right) <= eps) out.degenerate = true;
      left.add_arc(a, r_left, eps);
      right.add_arc(a, r_right, eps);
    }
  }
  out.left = left.build();
  out.right = right.build();
  return out;
}

}  // namespace mmc
