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
#include <limits>
#include <vector>

#include "mmc/baselines.hpp"
#include "mmc/curve.hpp"
#include "mmc/optimal.hpp"
#include "support/test_support.hpp"

namespace mmc {
namespace {

using test::error_of;
using test::kSqrt2;

PiecewiseCurve unit_quarter() {
  // Center (0,1), starts at the origin heading +x.
  return CurveBuilder({0, 0}, {1, 0}).arc(1.0, kPi / 2).build();
}

TEST(Evaluate, QuarterCircle) {
  const CurveSample s = evaluate(unit_quarter(), kPi / 2);
  EXPECT_NEAR(s.point.x, 1.0, 1e-15);
  EXPECT_NEAR(s.point.y, 1.0, 1e-15);
  EXPECT_NEAR(s.tangent.x, 0.0, 1e-15);
  EXPECT_NEAR(s.tangent.y, 1.0, 1e-15);
  EXPECT_EQ(s.curvature, 1.0);
}

TEST(Evaluate, Segment) {
  const PiecewiseCurve c({Segment{{0, 0}, {2, 0}}});
  const CurveSample s = evaluate(c, 1.0);
  EXPECT_EQ(s.point, (Point2{1, 0}));
  EXPECT_EQ(s.tangent, (Vec2{1, 0}));
  EXPECT_EQ(s.curvature, 0.0);
}

TEST(Evaluate, OutOfRange) {
  const PiecewiseCurve c({Segment{{0, 0}, {2, 0}}});
  EXPECT_EQ(error_of([&] { (void)evaluate(c, 2.0 + 1e-6); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(error_of([&] { (void)evaluate(c, -1e-6); }), ErrorCode::kOutOfRange);
  EXPECT_FALSE(error_of([&] { (void)evaluate(c, 2.0 + 1e-13); }));
  EXPECT_EQ(error_of([] { (void)evaluate(PiecewiseCurve{}, 0.0); }), ErrorCode::kInvalidInput);
}

TEST(Evaluate, CurvatureSignFollowsSweep) {
  const PiecewiseCurve c = CurveBuilder({0, 0}, {1, 0}).arc(2.0, -1.0).build();
  EXPECT_EQ(evaluate(c, 1.0).curvature, -0.5);
}

TEST(Evaluate, CurvatureJumpOnWorkedExample) {
  // Segment first here: the jump from 0 to 1/R_a sits at s = segment length.
  const ProblemInstance inst = test::worked_example();
  const OptimalSolution J = synthesize(inst);
  const double d = (kSqrt2 - 1) / 2;
  const double ra = (kSqrt2 - 1) / 2;
  EXPECT_EQ(evaluate(J.curve, d - 1e-9).curvature, 0.0);
  EXPECT_NEAR(evaluate(J.curve, d + 1e-9).curvature, 1 / ra, 1e-12);
  EXPECT_NEAR(J.curve.length(), d + ra * 3 * kPi / 4, 1e-15);

  // Arc-first mirror image: the arc ends at l = R_a * 3 pi / 4.
  const ProblemInstance m = mirrored_reverse(inst);
  const OptimalSolution Jm = synthesize(m);
  const double l = ra * 3 * kPi / 4;
  EXPECT_NEAR(l, 0.4879838567, 1e-10);
  EXPECT_NEAR(evaluate(Jm.curve, l - 1e-9).curvature, 4.828427, 1e-6);
  EXPECT_EQ(evaluate(Jm.curve, l + 1e-9).curvature, 0.0);
}

TEST(Heading, EndpointsAndMidArc) {
  const ProblemInstance inst = test::worked_example();
  const OptimalSolution J = synthesize(inst);
  const double ra = J.radius;
  EXPECT_EQ(heading(J.curve, inst, 0.0), 0.0);
  EXPECT_NEAR(heading(J.curve, inst, J.curve.length()), 3 * kPi / 4, 1e-12);
  const double d = J.segment_length;
  EXPECT_NEAR(heading(J.curve, inst, d + ra * 3 * kPi / 8), 3 * kPi / 8, 1e-12);

  const ProblemInstance m = mirrored_reverse(inst);
  const OptimalSolution Jm = synthesize(m);
  EXPECT_NEAR(heading(Jm.curve, m, Jm.arc_length() / 2), 3 * kPi / 8, 1e-12);
}

TEST(Heading, IsNotRewrapped) {
  const ProblemInstance inst = test::quarter_turn();
  // Full turn plus a quarter: heading exceeds pi.
  const PiecewiseCurve c = CurveBuilder(inst.A(), inst.alpha()).arc(0.5, 1.5 * kPi).arc(0.5, 0.75 * kPi).build();
  EXPECT_NEAR(heading(c, inst, c.length()), 2.25 * kPi, 1e-12);
}

TEST(Construction, RejectsKinksAndGaps) {
  EXPECT_EQ(error_of([] { (void)PiecewiseCurve({Segment{{0, 0}, {1, 0}}, Segment{{1, 0}, {1, 1}}}); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(error_of([] { (void)PiecewiseCurve({Segment{{0, 0}, {1, 0}}, Segment{{1.1, 0}, {2, 0}}}); }),
            ErrorCode::kInvalidInput);
  const PiecewiseCurve kinked({Segment{{0, 0}, {1, 0}}, Segment{{1, 0}, {1, 1}}}, JointCheck::kPosition);
  EXPECT_FALSE(kinked.tangent_continuous());
}

TEST(Construction, RejectsInvalidPrimitives) {
  EXPECT_EQ(error_of([] { (void)PiecewiseCurve({Arc{{0, 0}, -1.0, PrincipalAngle(0.0), 1.0}}); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(error_of([] { (void)PiecewiseCurve({Arc{{0, 0}, 1.0, PrincipalAngle(0.0), 7.0}}); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(error_of([] { (void)PiecewiseCurve({Segment{{0, 0}, {NAN, 0}}}); }), ErrorCode::kInvalidInput);
}

TEST(Construction, DropsZeroLengthPieces) {
  const PiecewiseCurve c({Segment{{0, 0}, {1, 0}}, Segment{{1, 0}, {1, 0}}, Segment{{1, 0}, {2, 0}}});
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.length(), 2.0);
  ASSERT_EQ(c.breakpoints().size(), 3u);
  EXPECT_EQ(c.breakpoints()[1], 1.0);
}

TEST(Construction, LengthIsSumOfPieces) {
  const PiecewiseCurve c = CurveBuilder({0, 0}, {1, 0}).line(0.3).arc(0.7, 1.1).line(0.2).arc(0.4, 0.3).build();
  double sum = 0.0;
  for (const auto& p : c.primitives()) sum += length(p);
  EXPECT_EQ(c.length(), sum);
  EXPECT_NEAR(c.length(), 0.3 + 0.77 + 0.2 + 0.12, 1e-15);
}

TEST(Membership, OptimalCurveIsInE) {
  const ProblemInstance inst = test::worked_example();
  const MembershipReport r = check_membership(synthesize(inst).curve, inst);
  EXPECT_TRUE(r.in_e);
  EXPECT_TRUE(r.unit_speed && r.tangent_continuous && r.curvature_nonnegative && r.phi_monotone && r.phi_range_ok);
  EXPECT_LE(r.endpoint_a_residual, r.position_tol);
  EXPECT_LE(r.endpoint_b_residual, r.position_tol);
  EXPECT_LE(r.tangent_a_residual, r.angle_tol);
  EXPECT_LE(r.tangent_b_residual, r.angle_tol);
}

TEST(Membership, MissingLastPieceFails) {
  const ProblemInstance inst = mirrored_reverse(test::worked_example());
  const PiecewiseCurve J = synthesize(inst).curve;
  ASSERT_EQ(J.size(), 2u);
  const PiecewiseCurve cut({J.primitives()[0]});
  const MembershipReport r = check_membership(cut, inst);
  EXPECT_GT(r.endpoint_b_residual, 0.1);
  EXPECT_FALSE(r.in_e);
}

TEST(Membership, ClockwiseArcBreaksNonnegativeCurvature) {
  const ProblemInstance inst = test::quarter_turn();
  const PiecewiseCurve c = CurveBuilder(inst.A(), inst.alpha()).arc(0.3, 1.0).arc(0.3, -0.2).arc(0.3, 0.3).build();
  const MembershipReport r = check_membership(c, inst);
  EXPECT_FALSE(r.curvature_nonnegative);
  EXPECT_FALSE(r.phi_monotone);
  EXPECT_FALSE(r.in_e);
}

TEST(Membership, InvariantUnderRigidMotion) {
  test::for_random_instances(31, 200, [](const ProblemInstance& inst, test::Gen& gen) {
    const double rot = gen.uniform(-kPi, kPi);
    const Vec2 shift = gen.point(10);
    const ProblemInstance t = similarity_transform(inst, PrincipalAngle(rot), 1.0, shift);
    const auto map = [&](const Point2& p) { return rotate(p, rot) + shift; };
    // A deliberately imperfect member: dubins-like chain that misses B.
    const PiecewiseCurve good = synthesize(inst).curve;
    const PiecewiseCurve bad = CurveBuilder(inst.A(), inst.alpha()).arc(radius_Ra(inst), inst.omega().value() / 2).build();
    for (const PiecewiseCurve* c : {&good, &bad}) {
      const MembershipReport r0 = check_membership(*c, inst);
      const MembershipReport r1 = check_membership(map_curve(*c, map, 1.0, true), t);
      EXPECT_EQ(r0.in_e, r1.in_e);
      EXPECT_EQ(r0.curvature_nonnegative, r1.curvature_nonnegative);
      EXPECT_EQ(r0.phi_monotone, r1.phi_monotone);
      EXPECT_EQ(r0.phi_range_ok, r1.phi_range_ok);
      EXPECT_EQ(r0.endpoint_b_residual <= r0.position_tol, r1.endpoint_b_residual <= r1.position_tol);
    }
  });
}

TEST(Membership, HeadingPropertiesOnMembers) {
  test::for_random_instances(32, 300, [](const ProblemInstance& inst, test::Gen&) {
    const PiecewiseCurve J = synthesize(inst).curve;
    const double omega = inst.omega().value();
    EXPECT_NEAR(heading(J, inst, 0.0), 0.0, 1e-12);
    EXPECT_NEAR(heading(J, inst, J.length()), omega, 1e-9);
    double prev = 0.0;
    for (const auto& s : sample_polyline(J, 200)) {
      const double phi = heading(J, inst, s.s);
      EXPECT_GE(phi, prev - 1e-12);
      EXPECT_GE(phi, -1e-12);
      EXPECT_LE(phi, omega + 1e-9);
      prev = phi;
    }
    for (double b : J.breakpoints()) {
      EXPECT_GE(heading(J, inst, b), -1e-12);
    }
  });
}

TEST(Membership, ReversalFlipsMonotonicity) {
  test::for_random_instances(33, 200, [](const ProblemInstance& inst, test::Gen&) {
    const PiecewiseCurve J = synthesize(inst).curve;
    const PiecewiseCurve R = reverse(J);
    EXPECT_LT(distance(R.start_point(), inst.B()), 1e-12 * inst.diameter());
    EXPECT_LT(distance(R.end_point(), inst.A()), 1e-12 * inst.diameter());
    EXPECT_LT(norm(R.start_tangent() + inst.beta()), 1e-12);
    // Heading measured from -beta decreases from 0 to -Omega.
    const Vec2 start = R.start_tangent();
    double prev = 0.0;
    for (const auto& s : sample_polyline(R, 100)) {
      EXPECT_LE(s.curvature, 0.0);
      const double psi = std::atan2(cross(start, s.tangent), dot(start, s.tangent));
      EXPECT_LE(psi, prev + 1e-12);
      prev = psi;
    }
    EXPECT_NEAR(prev, -inst.omega().value(), 1e-9);
  });
}

TEST(MaxCurvature, Examples) {
  EXPECT_EQ(max_curvature(PiecewiseCurve({Segment{{0, 0}, {1, 0}}})), 0.0);
  EXPECT_NEAR(max_curvature(synthesize(test::worked_example()).curve), 2 * (kSqrt2 + 1), 1e-12);
  const PiecewiseCurve two = CurveBuilder({0, 0}, {1, 0}).arc(0.3, 0.5).arc(0.5, 0.5).build();
  EXPECT_EQ(max_curvature(two), 1 / 0.3);
  EXPECT_EQ(error_of([] { (void)max_curvature(PiecewiseCurve{}); }), ErrorCode::kInvalidInput);
}

TEST(SamplePolyline, EndpointsOnly) {
  const auto s = sample_polyline(unit_quarter(), 1);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].s, 0.0);
  EXPECT_EQ(s[1].s, kPi / 2);
  EXPECT_NEAR(s[1].point.x, 1.0, 1e-15);
}

TEST(SamplePolyline, IntegerAbscissae) {
  const auto s = sample_polyline(PiecewiseCurve({Segment{{0, 0}, {4, 0}}}), 4);
  ASSERT_EQ(s.size(), 5u);
  for (int i = 0; i <= 4; ++i) {
    EXPECT_EQ(s[i].s, i);
    EXPECT_EQ(s[i].point.x, i);
  }
}

TEST(SamplePolyline, RejectsZeroCount) {
  EXPECT_EQ(error_of([] { (void)sample_polyline(unit_quarter(), 0); }), ErrorCode::kInvalidInput);
}

TEST(SamplePolyline, ChordLengthConvergesQuadratically) {
  const PiecewiseCurve c = CurveBuilder({0, 0}, {1, 0}).arc(1.0, 2.0).build();
  const auto chord_error = [&](int n) {
    const auto s = sample_polyline(c, n);
    double sum = 0.0;
    for (std::size_t i = 1; i < s.size(); ++i) sum += distance(s[i - 1].point, s[i].point);
    return c.length() - sum;
  };
  const double e1 = chord_error(20);
  const double e2 = chord_error(40);
  EXPECT_GT(e1, 0.0);
  EXPECT_NEAR(std::log2(e1 / e2), 2.0, 0.05);
}

std::vector<Point2> arc_points(double R, double h, int n) {
  std::vector<Point2> pts;
  for (int i = 0; i <= n; ++i) pts.push_back(Point2{0.3, -1.2} + unit_vector(0.2 + i * h / R) * R);
  return pts;
}

double max_error_vs(const std::vector<double>& k, double exact) {
  double worst = 0.0;
  for (double v : k) worst = std::max(worst, std::abs(v - exact));
  return worst;
}

TEST(NumericCurvature, ArcConvergenceOrder) {
  for (double R : {0.2, 1.0, 7.5}) {
    const double h = 0.05 * R;
    const double e1 = max_error_vs(numeric_curvature(arc_points(R, h, 40)), 1 / R);
    const double e2 = max_error_vs(numeric_curvature(arc_points(R, h / 2, 80)), 1 / R);
    EXPECT_LT(e1, 1.0 / R * h * h / (R * R));
    EXPECT_GE(std::log2(e1 / e2), 1.9) << "R=" << R;
  }
}

TEST(NumericCurvature, CollinearIsZero) {
  std::vector<Point2> pts;
  for (int i = 0; i < 10; ++i) pts.push_back(Point2{0.5, 1} * i);
  for (double k : numeric_curvature(pts)) EXPECT_EQ(k, 0.0);
}

TEST(NumericCurvature, RejectsShortOrRepeated) {
  const std::vector<Point2> two{{0, 0}, {1, 0}};
  EXPECT_EQ(error_of([&] { (void)numeric_curvature(two); }), ErrorCode::kInvalidInput);
  const std::vector<Point2> rep{{0, 0}, {0, 0}, {1, 0}};
  EXPECT_EQ(error_of([&] { (void)numeric_curvature(rep); }), ErrorCode::kInvalidInput);
}

TEST(NumericCurvature, BezierPeakOnWorkedExample) {
  const QuadraticBezier b = bezier_for(test::worked_example());
  const auto pts = sample_bezier(b, 20000);
  const auto k = numeric_curvature(pts);
  const double peak = *std::max_element(k.begin(), k.end());
  EXPECT_NEAR(peak, 5 * std::sqrt(5.0), 1e-6 * 5 * std::sqrt(5.0));
}

TEST(NumericCurvature, SupMatchesMaxCurvature) {
  test::for_random_instances(34, 50, [](const ProblemInstance& inst, test::Gen&) {
    const PiecewiseCurve J = synthesize(inst).curve;
    const int n = 400;
    std::vector<Point2> pts;
    double extent = 0.0;
    for (const auto& s : sample_polyline(J, n)) {
      pts.push_back(s.point);
      extent = std::max(extent, norm(s.point));
    }
    const auto k = numeric_curvature(pts);
    double sup = 0.0;
    for (double v : k) sup = std::max(sup, std::abs(v));
    const double h = J.length() / n;
    const double kmax = max_curvature(J);
    // Truncation is O(h^2 k^3). Sample points carry rounding of order
    // eps * (extent + R), which a second difference amplifies by 1 / h^2.
    const double eps = std::numeric_limits<double>::epsilon();
    const double rounding = 8.0 * eps * (extent + 1.0 / kmax) / (h * h);
    EXPECT_NEAR(sup, kmax, kmax * (h * kmax) * (h * kmax) + rounding);
  });
}

TEST(Reverse, IsInvolution) {
  const PiecewiseCurve c = CurveBuilder({0, 0}, {1, 0}).line(0.3).arc(0.7, 1.1).line(0.2).build();
  const PiecewiseCurve rr = reverse(reverse(c));
  EXPECT_LT(test::sampled_hausdorff(c, rr), 1e-14);
  EXPECT_NEAR(reverse(c).length(), c.length(), 1e-15);
}

TEST(MapCurve, ScaledReflection) {
  const PiecewiseCurve c = CurveBuilder({0, 0}, {1, 0}).arc(1.0, 1.0).build();
  const PiecewiseCurve m = map_curve(c, [](const Point2& p) { return Point2{2 * p.x, -2 * p.y}; }, 2.0, false);
  EXPECT_NEAR(m.length(), 2.0, 1e-15);
  EXPECT_NEAR(evaluate(m, 1.0).curvature, -0.5, 1e-15);
  const Point2 e = c.end_point();
  EXPECT_LT(distance(m.end_point(), Point2{2 * e.x, -2 * e.y}), 1e-15);
}

TEST(DistanceTo, PointsOnAndOffCurve) {
  const PiecewiseCurve c = CurveBuilder({0, 0}, {1, 0}).line(1.0).arc(1.0, kPi / 2).build();
  EXPECT_NEAR(distance_to(c, {0.5, 0}), 0.0, 1e-15);
  EXPECT_NEAR(distance_to(c, {0.5, 0.25}), 0.25, 1e-15);
  EXPECT_NEAR(distance_to(c, {1, 1}), 1.0, 1e-15);  // arc center
  EXPECT_NEAR(distance_to(c, {3, 1}), 1.0, 1e-15);
}

}  // namespace
}  // namespace mmc
