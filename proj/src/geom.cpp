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

#include "mmc/geom.hpp"

#include <string>

#include "mmc/error.hpp"

namespace mmc {

namespace {

constexpr double kUnitTol = 1e-9;

void require_unit(const Vec2& u, const char* name) {
  if (!is_finite(u) || std::abs(norm(u) - 1.0) > kUnitTol) {
    fail(ErrorCode::kInvalidInput, std::string(name) + " is not a unit vector");
  }
}

}  // namespace

Vec2 make_vec2(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    fail(ErrorCode::kInvalidInput, "non-finite coordinate");
  }
  return {x, y};
}

Vec2 normalized(const Vec2& a) {
  const double n = norm(a);
  if (!std::isfinite(n) || n <= 1e-300) {
    fail(ErrorCode::kInvalidInput, "cannot normalize a zero or non-finite vector");
  }
  return a / n;
}

double wrap_principal(double angle) noexcept {
  double r = std::remainder(angle, kTwoPi);  // [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  return r;
}

PrincipalAngle oriented_angle(const Vec2& u, const Vec2& v) {
  require_unit(u, "u");
  require_unit(v, "v");
  const double s = cross(u, v);
  const double c = dot(u, v);
  // atan2(-0, -1) = -pi; the principal determination wants +pi.
  if (s == 0.0 && c < 0.0) return PrincipalAngle(kPi);
  return PrincipalAngle(std::atan2(s, c));
}

Frame::Frame(const Point2& origin, const Vec2& x_axis)
    : origin_(origin), x_axis_(normalized(x_axis)), y_axis_(rot90(x_axis_)) {}

Point2 to_frame(const Frame& f, const Point2& p) noexcept {
  const Vec2 d = p - f.origin();
  return {dot(d, f.x_axis()), dot(d, f.y_axis())};
}

Point2 from_frame(const Frame& f, const Point2& p) noexcept {
  return f.origin() + f.x_axis() * p.x + f.y_axis() * p.y;
}

}  // namespace mmc
