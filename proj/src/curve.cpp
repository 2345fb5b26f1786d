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

#include "mmc/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "mmc/error.hpp"

namespace mmc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kJointPosTol = 1e-9;
constexpr double kDropRelTol = 1e-12;
constexpr double kEvalSlack = 1e-12;

double sign_of(double v) noexcept { return v < 0.0 ? -1.0 : 1.0; }

double extent_of(const Primitive& p) noexcept {
  return std::visit(Overloaded{
                        [](const Segment& s) {
                          return std::max({std::abs(s.start.x), std::abs(s.start.y),
                                           std::abs(s.end.x), std::abs(s.end.y)});
                        },
                        [](const Arc& a) {
                          return std::max(std::abs(a.center.x), std::abs(a.center.y)) + a.radius;
                        },
                    },
                    p);
}

void validate(const Primitive& p) {
  std::visit(Overloaded{
                 [](const Segment& s) {
                   if (!is_finite(s.start) || !is_finite(s.end)) {
                     fail(ErrorCode::kInvalidInput, "segment with non-finite endpoint");
                   }
                 },
                 [](const Arc& a) {
                   if (!is_finite(a.center) || !std::isfinite(a.radius) ||
                       !std::isfinite(a.sweep) || !std::isfinite(a.start_angle.value())) {
                     fail(ErrorCode::kInvalidInput, "arc with non-finite data");
                   }
                   if (!(a.radius > 0.0)) fail(ErrorCode::kInvalidInput, "arc radius must be positive");
                   if (std::abs(a.sweep) >= kTwoPi) {
                     fail(ErrorCode::kInvalidInput, "arc sweep must lie in (-2pi, 2pi)");
                   }
                 },
             },
             p);
}

// Angular offset of `angle` from `start` measured in the direction of `dir`,
// reduced to [0, 2pi).
double forward_offset(double start, double angle, double dir) noexcept {
  double d = std::fmod((angle - start) * dir, kTwoPi);
  if (d < 0.0) d += kTwoPi;
  return d;
}

}  // namespace

double length(const Primitive& p) noexcept {
  return std::visit(Overloaded{
                        [](const Segment& s) { return distance(s.start, s.end); },
                        [](const Arc& a) { return a.radius * std::abs(a.sweep); },
                    },
                    p);
}

Point2 start_point(const Primitive& p) noexcept {
  return std::visit(Overloaded{
                        [](const Segment& s) { return s.start; },
                        [](const Arc& a) { return a.center + unit_vector(a.start_angle.value()) * a.radius; },
                    },
                    p);
}

Point2 end_point(const Primitive& p) noexcept {
  return std::visit(Overloaded{
                        [](const Segment& s) { return s.end; },
                        [](const Arc& a) {
                          return a.center + unit_vector(a.start_angle.value() + a.sweep) * a.radius;
                        },
                    },
                    p);
}

Vec2 start_tangent(const Primitive& p) {
  return std::visit(Overloaded{
                        [](const Segment& s) { return normalized(s.end - s.start); },
                        [](const Arc& a) {
                          return rot90(unit_vector(a.start_angle.value())) * sign_of(a.sweep);
                        },
                    },
                    p);
}

Vec2 end_tangent(const Primitive& p) {
  return std::visit(Overloaded{
                        [](const Segment& s) { return normalized(s.end - s.start); },
                        [](const Arc& a) {
                          return rot90(unit_vector(a.start_angle.value() + a.sweep)) * sign_of(a.sweep);
                        },
                    },
                    p);
}

double turning(const Primitive& p) noexcept {
  if (const auto* a = std::get_if<Arc>(&p)) return a->sweep;
  return 0.0;
}

double signed_curvature(const Primitive& p) noexcept {
  if (const auto* a = std::get_if<Arc>(&p)) return sign_of(a->sweep) / a->radius;
  return 0.0;
}

CurveSample evaluate_primitive(const Primitive& p, double local_s) noexcept {
  return std::visit(Overloaded{
                        [local_s](const Segment& seg) {
                          const double len = distance(seg.start, seg.end);
                          const Vec2 t = (seg.end - seg.start) / len;
                          return CurveSample{local_s, seg.start + t * local_s, t, 0.0};
                        },
                        [local_s](const Arc& a) {
                          const double dir = sign_of(a.sweep);
                          const double theta = a.start_angle.value() + dir * local_s / a.radius;
                          const Vec2 radial = unit_vector(theta);
                          return CurveSample{local_s, a.center + radial * a.radius, rot90(radial) * dir,
                                             dir / a.radius};
                        },
                    },
                    p);
}

PiecewiseCurve::PiecewiseCurve(std::vector<Primitive> primitives, JointCheck check) {
  double extent = 1.0;
  for (const auto& p : primitives) {
    validate(p);
    extent = std::max(extent, extent_of(p));
  }
  const double drop_tol = kDropRelTol * extent;
  primitives_.reserve(primitives.size());
  for (auto& p : primitives) {
    if (mmc::length(p) > drop_tol) primitives_.push_back(std::move(p));
  }

  const double pos_tol = kJointPosTol * extent;
  for (std::size_t i = 1; i < primitives_.size(); ++i) {
    const double gap = distance(mmc::end_point(primitives_[i - 1]), mmc::start_point(primitives_[i]));
    if (!(gap <= pos_tol)) {
      fail(ErrorCode::kInvalidInput,
           "position gap " + std::to_string(gap) + " at joint " + std::to_string(i));
    }
    const double kink =
        std::abs(oriented_angle(mmc::end_tangent(primitives_[i - 1]), mmc::start_tangent(primitives_[i])).value());
    if (kink > kAngleTol) {
      if (check == JointCheck::kTangent) {
        fail(ErrorCode::kInvalidInput, "tangent discontinuity at joint " + std::to_string(i));
      }
      tangent_continuous_ = false;
    }
  }

  breakpoints_.reserve(primitives_.size() + 1);
  breakpoints_.push_back(0.0);
  for (const auto& p : primitives_) {
    length_ += mmc::length(p);
    breakpoints_.push_back(length_);
  }
  if (primitives_.empty()) breakpoints_.clear();
}

Point2 PiecewiseCurve::start_point() const {
  if (empty()) fail(ErrorCode::kInvalidInput, "empty curve");
  return mmc::start_point(primitives_.front());
}

Point2 PiecewiseCurve::end_point() const {
  if (empty()) fail(ErrorCode::kInvalidInput, "empty curve");
  return mmc::end_point(primitives_.back());
}

Vec2 PiecewiseCurve::start_tangent() const {
  if (empty()) fail(ErrorCode::kInvalidInput, "empty curve");
  return mmc::start_tangent(primitives_.front());
}

Vec2 PiecewiseCurve::end_tangent() const {
  if (empty()) fail(ErrorCode::kInvalidInput, "empty curve");
  return mmc::end_tangent(primitives_.back());
}

std::size_t PiecewiseCurve::index_at(double s) const noexcept {
  // First breakpoint strictly greater than s, minus one.
  const auto it = std::upper_bound(breakpoints_.begin() + 1, breakpoints_.end() - 1, s);
  return static_cast<std::size_t>(it - (breakpoints_.begin() + 1));
}

CurveBuilder::CurveBuilder(const Point2& start, const Vec2& heading) : position_(start) {
  const Vec2 h = normalized(heading);
  initial_angle_ = heading_angle_ = std::atan2(h.y, h.x);
}

CurveBuilder& CurveBuilder::line(double len) {
  if (!(len >= 0.0) || !std::isfinite(len)) fail(ErrorCode::kInvalidInput, "negative segment length");
  if (len == 0.0) return *this;
  const Point2 end = position_ + unit_vector(heading_angle_) * len;
  primitives_.emplace_back(Segment{position_, end});
  position_ = end;
  return *this;
}

CurveBuilder& CurveBuilder::arc(double radius, double sweep) {
  if (!(radius > 0.0) || !std::isfinite(radius)) fail(ErrorCode::kInvalidInput, "arc radius must be positive");
  if (sweep == 0.0) return *this;
  const double dir = sign_of(sweep);
  const Point2 center = position_ + rot90(unit_vector(heading_angle_)) * (dir * radius);
  const double start_angle = heading_angle_ - dir * kPi / 2.0;
  primitives_.emplace_back(Arc{center, radius, PrincipalAngle(start_angle), sweep});
  heading_angle_ += sweep;
  position_ = center + unit_vector(start_angle + sweep) * radius;
  return *this;
}

PiecewiseCurve CurveBuilder::build() const { return PiecewiseCurve(primitives_); }

CurveSample evaluate(const PiecewiseCurve& curve, double s) {
  if (curve.empty()) fail(ErrorCode::kInvalidInput, "empty curve");
  const double slack = kEvalSlack * std::max(1.0, curve.length());
  if (!(s >= -slack && s <= curve.length() + slack)) {
    fail(ErrorCode::kOutOfRange, "arc length " + std::to_string(s) + " outside [0, L]");
  }
  s = std::clamp(s, 0.0, curve.length());
  const std::size_t i = curve.index_at(s);
  const auto& prim = curve.primitives()[i];
  const double local = std::clamp(s - curve.breakpoints()[i], 0.0, length(prim));
  CurveSample out = evaluate_primitive(prim, local);
  out.s = s;
  return out;
}

namespace {

// Heading at the start of every primitive, plus the final heading.
std::vector<double> breakpoint_headings(const PiecewiseCurve& curve, const ProblemInstance& inst) {
  const auto prims = curve.primitives();
  std::vector<double> out;
  out.reserve(prims.size() + 1);
  double phi = oriented_angle(inst.alpha(), start_tangent(prims.front())).value();
  out.push_back(phi);
  for (std::size_t i = 0; i < prims.size(); ++i) {
    phi += turning(prims[i]);
    if (i + 1 < prims.size()) {
      phi += oriented_angle(end_tangent(prims[i]), start_tangent(prims[i + 1])).value();
    }
    out.push_back(phi);
  }
  return out;
}

}  // namespace

double heading(const PiecewiseCurve& curve, const ProblemInstance& inst, double s) {
  const CurveSample sample = evaluate(curve, s);
  const std::size_t i = curve.index_at(sample.s);
  const auto prims = curve.primitives();
  double phi = oriented_angle(inst.alpha(), start_tangent(prims.front())).value();
  for (std::size_t k = 0; k < i; ++k) {
    phi += turning(prims[k]);
    phi += oriented_angle(end_tangent(prims[k]), start_tangent(prims[k + 1])).value();
  }
  const double local = sample.s - curve.breakpoints()[i];
  return phi + signed_curvature(prims[i]) * local;
}

MembershipReport check_membership(const PiecewiseCurve& curve, const ProblemInstance& inst) {
  MembershipReport r;
  r.position_tol = inst.eps_dist();
  if (curve.empty()) {
    const double inf = std::numeric_limits<double>::infinity();
    r.endpoint_a_residual = r.endpoint_b_residual = inf;
    r.tangent_a_residual = r.tangent_b_residual = inf;
    r.in_e = false;
    return r;
  }
  const double omega = inst.omega().value();
  const double tol = r.angle_tol;

  r.endpoint_a_residual = distance(curve.start_point(), inst.A());
  r.endpoint_b_residual = distance(curve.end_point(), inst.B());

  const std::vector<double> phi = breakpoint_headings(curve, inst);
  r.tangent_a_residual = std::abs(phi.front());
  r.tangent_b_residual = std::abs(phi.back() - omega);
  r.tangent_continuous = curve.tangent_continuous();

  for (const auto& p : curve.primitives()) {
    if (turning(p) < 0.0) r.curvature_nonnegative = false;
  }
  for (std::size_t i = 1; i < phi.size(); ++i) {
    if (phi[i] < phi[i - 1] - tol) r.phi_monotone = false;
  }
  if (!r.curvature_nonnegative) r.phi_monotone = false;
  for (double v : phi) {
    if (v < -tol || v > omega + tol) r.phi_range_ok = false;
  }

  r.in_e = r.endpoint_a_residual <= r.position_tol && r.endpoint_b_residual <= r.position_tol &&
           r.tangent_a_residual <= tol && r.tangent_b_residual <= tol && r.unit_speed &&
           r.tangent_continuous && r.curvature_nonnegative && r.phi_monotone && r.phi_range_ok;
  return r;
}

double max_curvature(const PiecewiseCurve& curve) {
  if (curve.empty()) fail(ErrorCode::kInvalidInput, "empty curve");
  double k = 0.0;
  for (const auto& p : curve.primitives()) k = std::max(k, std::abs(signed_curvature(p)));
  return k;
}

std::vector<CurveSample> sample_polyline(const PiecewiseCurve& curve, int n) {
  if (n < 1) fail(ErrorCode::kInvalidInput, "sample count must be at least 1");
  if (curve.empty()) fail(ErrorCode::kInvalidInput, "empty curve");
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  const double len = curve.length();
  for (int k = 0; k <= n; ++k) {
    const double s = (k == n) ? len : len * static_cast<double>(k) / n;
    out.push_back(evaluate(curve, s));
  }
  return out;
}

std::vector<double> numeric_curvature(std::span<const Point2> points) {
  const std::size_t n = points.size();
  if (n < 3) fail(ErrorCode::kInvalidInput, "numeric curvature needs at least 3 points");
  std::vector<double> chord_len(n - 1);
  std::vector<double> chord_dir(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const Vec2 c = points[j + 1] - points[j];
    chord_len[j] = norm(c);
    if (!(chord_len[j] > 0.0)) fail(ErrorCode::kInvalidInput, "repeated sample point");
    chord_dir[j] = std::atan2(c.y, c.x);
  }
  std::vector<double> kappa(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h = 0.5 * (chord_len[i - 1] + chord_len[i]);
    kappa[i] = wrap_principal(chord_dir[i] - chord_dir[i - 1]) / h;
  }
  if (n == 3) {
    kappa[0] = kappa[2] = kappa[1];
  } else {
    kappa[0] = 2.0 * kappa[1] - kappa[2];
    kappa[n - 1] = 2.0 * kappa[n - 2] - kappa[n - 3];
  }
  return kappa;
}

PiecewiseCurve reverse(const PiecewiseCurve& curve) {
  std::vector<Primitive> out;
  out.reserve(curve.size());
  const auto prims = curve.primitives();
  for (auto it = prims.rbegin(); it != prims.rend(); ++it) {
    std::visit(Overloaded{
                   [&out](const Segment& s) { out.emplace_back(Segment{s.end, s.start}); },
                   [&out](const Arc& a) {
                     out.emplace_back(Arc{a.center, a.radius,
                                          PrincipalAngle(a.start_angle.value() + a.sweep), -a.sweep});
                   },
               },
               *it);
  }
  return PiecewiseCurve(std::move(out),
                        curve.tangent_continuous() ? JointCheck::kTangent : JointCheck::kPosition);
}

PiecewiseCurve map_curve(const PiecewiseCurve& curve,
                         const std::function<Point2(const Point2&)>& map, double scale,
                         bool orientation_preserving) {
  if (!(scale > 0.0)) fail(ErrorCode::kInvalidInput, "scale must be positive");
  std::vector<Primitive> out;
  out.reserve(curve.size());
  for (const auto& p : curve.primitives()) {
    std::visit(Overloaded{
                   [&](const Segment& s) { out.emplace_back(Segment{map(s.start), map(s.end)}); },
                   [&](const Arc& a) {
                     const Point2 c = map(a.center);
                     const Vec2 r = map(start_point(Primitive{a})) - c;
                     out.emplace_back(Arc{c, a.radius * scale, PrincipalAngle(std::atan2(r.y, r.x)),
                                          orientation_preserving ? a.sweep : -a.sweep});
                   },
               },
               p);
  }
  return PiecewiseCurve(std::move(out),
                        curve.tangent_continuous() ? JointCheck::kTangent : JointCheck::kPosition);
}

double distance_to(const PiecewiseCurve& curve, const Point2& p) {
  if (curve.empty()) fail(ErrorCode::kInvalidInput, "empty curve");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& prim : curve.primitives()) {
    const double d = std::visit(
        Overloaded{
            [&p](const Segment& s) {
              const Vec2 v = s.end - s.start;
              const double t = std::clamp(dot(p - s.start, v) / dot(v, v), 0.0, 1.0);
              return distance(p, s.start + v * t);
            },
            [&p](const Arc& a) {
              const Vec2 r = p - a.center;
              const double rn = norm(r);
              const double ends = std::min(distance(p, start_point(Primitive{a})),
                                           distance(p, end_point(Primitive{a})));
              if (rn == 0.0) return a.radius;
              const double off = forward_offset(a.start_angle.value(), std::atan2(r.y, r.x), sign_of(a.sweep));
              if (off <= std::abs(a.sweep)) return std::min(std::abs(rn - a.radius), ends);
              return ends;
            },
        },
        prim);
    best = std::min(best, d);
  }
  return best;
}

}  // namespace mmc
