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

// Planar primitives: vectors, principal angles, rotations and orthonormal
// frames. Everything here is a value type; functions are pure.

#pragma once

#include <cmath>
#include <numbers>

namespace mmc {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Angle tolerance (radians) used for angle equalities.
inline constexpr double kAngleTol = 1e-9;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(const Vec2& o) noexcept { x += o.x; y += o.y; return *this; }
  constexpr Vec2& operator-=(const Vec2& o) noexcept { x -= o.x; y -= o.y; return *this; }
  constexpr Vec2& operator*=(double k) noexcept { x *= k; y *= k; return *this; }

  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

using Point2 = Vec2;

constexpr Vec2 operator+(Vec2 a, const Vec2& b) noexcept { return a += b; }
constexpr Vec2 operator-(Vec2 a, const Vec2& b) noexcept { return a -= b; }
constexpr Vec2 operator-(const Vec2& a) noexcept { return {-a.x, -a.y}; }
constexpr Vec2 operator*(Vec2 a, double k) noexcept { return a *= k; }
constexpr Vec2 operator*(double k, Vec2 a) noexcept { return a *= k; }
constexpr Vec2 operator/(const Vec2& a, double k) noexcept { return {a.x / k, a.y / k}; }

constexpr double dot(const Vec2& a, const Vec2& b) noexcept { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Vec2& a, const Vec2& b) noexcept { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) noexcept { return std::hypot(a.x, a.y); }
inline double distance(const Point2& a, const Point2& b) noexcept { return norm(b - a); }
inline bool is_finite(const Vec2& a) noexcept { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Checked construction for data entering the library from outside.
/// Throws InvalidInput on NaN or infinite components.
Vec2 make_vec2(double x, double y);

/// Unit vector of `a`. Throws InvalidInput for (near-)zero or non-finite input.
Vec2 normalized(const Vec2& a);

/// Quarter-turn counterclockwise: (x, y) -> (-y, x).
constexpr Vec2 rot90(const Vec2& u) noexcept { return {-u.y, u.x}; }

/// Rotation of `u` by `angle` radians counterclockwise.
inline Vec2 rotate(const Vec2& u, double angle) noexcept {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * u.x - s * u.y, s * u.x + c * u.y};
}

/// Unit vector at polar angle `angle`.
inline Vec2 unit_vector(double angle) noexcept { return {std::cos(angle), std::sin(angle)}; }

/// Wraps any real into (-pi, pi].
double wrap_principal(double angle) noexcept;

/// Oriented angle value restricted to its principal determination (-pi, pi].
class PrincipalAngle {
 public:
  constexpr PrincipalAngle() noexcept = default;
  explicit PrincipalAngle(double radians) noexcept : value_(wrap_principal(radians)) {}

  [[nodiscard]] constexpr double value() const noexcept { return value_; }
  constexpr explicit operator double() const noexcept { return value_; }

  /// Strict (non-modular) equality up to kAngleTol.
  [[nodiscard]] bool approx_equal(const PrincipalAngle& other, double tol = kAngleTol) const noexcept {
    return std::abs(value_ - other.value_) <= tol;
  }

 private:
  double value_ = 0.0;
};

/// Signed angle in (-pi, pi] rotating unit `u` onto unit `v`.
/// Throws InvalidInput when either argument is not unit within 1e-9.
PrincipalAngle oriented_angle(const Vec2& u, const Vec2& v);

/// Direct orthonormal frame; y_axis is always rot90(x_axis).
class Frame {
 public:
  Frame() = default;
  /// `x_axis` is normalized; throws InvalidInput if it is zero.
  Frame(const Point2& origin, const Vec2& x_axis);

  [[nodiscard]] const Point2& origin() const noexcept { return origin_; }
  [[nodiscard]] const Vec2& x_axis() const noexcept { return x_axis_; }
  [[nodiscard]] const Vec2& y_axis() const noexcept { return y_axis_; }

 private:
  Point2 origin_{0.0, 0.0};
  Vec2 x_axis_{1.0, 0.0};
  Vec2 y_axis_{0.0, 1.0};
};

/// World coordinates -> coordinates in `f`.
Point2 to_frame(const Frame& f, const Point2& p) noexcept;
/// Coordinates in `f` -> world coordinates.
Point2 from_frame(const Frame& f, const Point2& p) noexcept;

}  // namespace mmc
