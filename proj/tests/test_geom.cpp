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

#include <gtest/gtest.h>

#include <cmath>

#include "mmc/geom.hpp"
#include "support/test_support.hpp"

namespace mmc {
namespace {

using test::error_of;
using test::Gen;

TEST(OrientedAngle, IdentityIsZero) {
  EXPECT_EQ(oriented_angle({1, 0}, {1, 0}).value(), 0.0);
}

TEST(OrientedAngle, QuarterTurn) {
  EXPECT_NEAR(oriented_angle({0, -1}, {1, 0}).value(), kPi / 2, 1e-15);
}

TEST(OrientedAngle, HalfTurnIsPlusPi) {
  EXPECT_EQ(oriented_angle({1, 0}, {-1, 0}).value(), kPi);
  EXPECT_EQ(oriented_angle({-1, 0}, {1, 0}).value(), kPi);
}

TEST(OrientedAngle, RejectsNonUnitAndZero) {
  EXPECT_EQ(error_of([] { (void)oriented_angle({2, 0}, {1, 0}); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(error_of([] { (void)oriented_angle({1, 0}, {0, 0}); }), ErrorCode::kInvalidInput);
  EXPECT_FALSE(error_of([] { (void)oriented_angle({1 + 1e-10, 0}, {0, 1}); }));
}

TEST(OrientedAngle, RotatingByResultGivesTarget) {
  Gen gen(11);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 u = gen.unit();
    const Vec2 v = gen.unit();
    const double a = oriented_angle(u, v).value();
    EXPECT_GT(a, -kPi);
    EXPECT_LE(a, kPi);
    EXPECT_LT(norm(rotate(u, a) - v), 1e-12);
  }
}

TEST(OrientedAngle, Antisymmetric) {
  Gen gen(12);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 u = gen.unit();
    const Vec2 v = gen.unit();
    const double uv = oriented_angle(u, v).value();
    const double vu = oriented_angle(v, u).value();
    if (uv == kPi) {
      EXPECT_EQ(vu, kPi);
    } else {
      EXPECT_NEAR(vu, -uv, 1e-15);
    }
  }
}

TEST(Rot90, Examples) {
  EXPECT_EQ(rot90({1, 0}), (Vec2{0, 1}));
  EXPECT_EQ(rot90({0, 1}), (Vec2{-1, 0}));
  EXPECT_EQ(rot90({3, 4}), (Vec2{-4, 3}));
}

TEST(Rot90, PreservesNormAndIsOrthogonal) {
  Gen gen(13);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 u = gen.point(1e3);
    EXPECT_EQ(norm(rot90(u)), norm(u));
    EXPECT_EQ(dot(u, rot90(u)), 0.0);
  }
}

TEST(PrincipalAngle, WrapsIntoHalfOpenRange) {
  EXPECT_EQ(PrincipalAngle(-kPi).value(), kPi);
  EXPECT_EQ(PrincipalAngle(kPi).value(), kPi);
  EXPECT_NEAR(PrincipalAngle(3 * kPi / 2).value(), -kPi / 2, 1e-15);
  EXPECT_NEAR(PrincipalAngle(7.0).value(), 7.0 - kTwoPi, 1e-15);
}

TEST(PrincipalAngle, WrapIsIdempotent) {
  Gen gen(14);
  for (int i = 0; i < 5000; ++i) {
    const PrincipalAngle a(gen.uniform(-100, 100));
    EXPECT_GT(a.value(), -kPi);
    EXPECT_LE(a.value(), kPi);
    EXPECT_EQ(PrincipalAngle(a.value()).value(), a.value());
  }
}

TEST(PrincipalAngle, ApproxEqualIsNotModular) {
  EXPECT_TRUE(PrincipalAngle(1.0).approx_equal(PrincipalAngle(1.0 + 5e-10)));
  EXPECT_FALSE(PrincipalAngle(kPi).approx_equal(PrincipalAngle(-kPi + 1e-6)));
}

TEST(Vec2Construction, RejectsNonFinite) {
  EXPECT_EQ(error_of([] { (void)make_vec2(std::nan(""), 0); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(error_of([] { (void)make_vec2(0, INFINITY); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(make_vec2(1, 2), (Vec2{1, 2}));
}

TEST(Frame, IdentityFrame) {
  const Frame f;
  const Point2 p{0.3, -7.5};
  EXPECT_EQ(to_frame(f, p), p);
  EXPECT_EQ(from_frame(f, p), p);
}

TEST(Frame, ExampleFrameAtA) {
  const Frame f({0.5, -0.5}, {-test::kSqrt2 / 2, test::kSqrt2 / 2});
  const Point2 o = to_frame(f, {0, 0});
  EXPECT_NEAR(o.x, test::kSqrt2 / 2, 1e-15);
  EXPECT_NEAR(o.y, 0.0, 1e-15);
}

TEST(Frame, AxesAreDirectAndUnit) {
  const Frame f({1, 2}, {3, 4});
  EXPECT_NEAR(norm(f.x_axis()), 1.0, 1e-12);
  EXPECT_EQ(f.y_axis(), rot90(f.x_axis()));
  EXPECT_EQ(error_of([] { (void)Frame({0, 0}, {0, 0}); }), ErrorCode::kInvalidInput);
}

TEST(Frame, RoundTripAndRigidity) {
  Gen gen(15);
  for (int i = 0; i < 1000; ++i) {
    const Frame f(gen.point(10), gen.point(1) + Vec2{1e-3, 0});
    const Point2 p = gen.point(10);
    const Point2 q = gen.point(10);
    EXPECT_LT(distance(from_frame(f, to_frame(f, p)), p), 1e-12 * 20);
    EXPECT_NEAR(distance(to_frame(f, p), to_frame(f, q)), distance(p, q), 1e-12 * 20);
  }
}

}  // namespace
}  // namespace mmc
