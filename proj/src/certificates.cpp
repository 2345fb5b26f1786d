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

#include "mmc/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mmc/error.hpp"

namespace mmc {

double support_check(const PiecewiseCurve& curve, int n) {
  const auto samples = sample_polyline(curve, n);
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& base : samples) {
    const Vec2 normal = rot90(base.tangent);
    for (const auto& other : samples) {
      worst = std::min(worst, dot(other.point - base.point, normal));
    }
  }
  return worst;
}

namespace {

// Problem restated so that the optimal arc starts at A.
struct ArcFirstView {
  ProblemInstance inst;
  OptimalSolution X;
  PiecewiseCurve Z;
};

ArcFirstView arc_first_view(const ProblemInstance& inst, const OptimalSolution& X,
                            const PiecewiseCurve& Z) {
  if (X.arc_first) return {inst, X, Z};
  const auto mirror = [&inst](const Point2& p) { return mirror_point(inst, p); };
  ProblemInstance m = mirrored_reverse(inst);
  OptimalSolution mx = synthesize(m);
  PiecewiseCurve mz = map_curve(reverse(Z), mirror, 1.0, false);
  return {m, mx, mz};
}

void check_hypotheses(const ArcFirstView& v, const ZetaOptions& options, int n) {
  if (n < 1) fail(ErrorCode::kInvalidInput, "sample count must be at least 1");
  if (v.Z.empty()) fail(ErrorCode::kHypothesisViolated, "empty competitor curve");
  const double ra = v.X.radius;
  if (distance(v.Z.start_point(), v.inst.A()) > v.inst.eps_dist() ||
      std::abs(oriented_angle(v.inst.alpha(), v.Z.start_tangent()).value()) > kAngleTol) {
    fail(ErrorCode::kHypothesisViolated, "competitor must start at A with tangent alpha");
  }
  if (options.enforce_hypothesis && max_curvature(v.Z) > (1.0 / ra) * (1.0 + 1e-9)) {
    fail(ErrorCode::kHypothesisViolated, "competitor curvature exceeds 1 / R_a");
  }
  if (v.Z.length() < v.X.arc_length() * (1.0 - 1e-12)) {
    fail(ErrorCode::kHypothesisViolated, "competitor shorter than the optimal arc");
  }
}

double clamp_to(const PiecewiseCurve& c, double s) { return std::min(s, c.length()); }

}  // namespace

std::vector<double> zeta_profile(const ProblemInstance& inst, const OptimalSolution& X,
                                 const PiecewiseCurve& Z, int n, const ZetaOptions& options) {
  const ArcFirstView v = arc_first_view(inst, X, Z);
  check_hypotheses(v, options, n);
  const double l = v.X.arc_length();
  std::vector<double> zeta;
  zeta.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double s = (k == n) ? l : l * k / n;
    const CurveSample x = evaluate(v.X.curve, clamp_to(v.X.curve, s));
    const CurveSample z = evaluate(v.Z, clamp_to(v.Z, s));
    zeta.push_back(dot(z.point - x.point, rot90(x.tangent)));
  }
  return zeta;
}

double theta_phi_bound(const ProblemInstance& inst, const OptimalSolution& X,
                       const PiecewiseCurve& Z, int n, const ZetaOptions& options) {
  const ArcFirstView v = arc_first_view(inst, X, Z);
  check_hypotheses(v, options, n);
  const double l = v.X.arc_length();
  const double slope = max_curvature(v.Z) - 1.0 / v.X.radius;
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= n; ++k) {
    const double s = (k == n) ? l : l * k / n;
    const double theta = heading(v.Z, v.inst, clamp_to(v.Z, s));
    const double phi = heading(v.X.curve, v.inst, clamp_to(v.X.curve, s));
    worst = std::max(worst, theta - phi - slope * s);
  }
  return worst;
}

ZetaCoefficients zeta_coefficients(double omega) noexcept {
  return {std::cos(omega) - std::cos(omega / 2.0), std::cos(omega / 2.0) - 1.0, -std::sin(omega),
          -std::sin(omega / 2.0)};
}

double zeta0_closed_form(const ProblemInstance& inst, double R1, double R2, double d1, double d2) {
  const ZetaCoefficients k = zeta_coefficients(inst.omega().value());
  const double ra = radius_Ra(inst);
  const double lead = std::max(inst.OA() - inst.OB(), 0.0);
  return k.a * (R1 - ra) + k.b * (R2 - ra) + k.c * (d1 - lead) + k.f * d2;
}

double zeta0_geometric(const ProblemInstance& inst, double R1, double R2, double d1, double d2) {
  const double half = inst.omega().value() / 2.0;
  CurveBuilder b(inst.A(), inst.alpha());
  b.line(d1).arc(R1, half).line(d2).arc(R2, half);
  return dot(b.position() - inst.B(), rot90(inst.beta()));
}

UV uv_functions(const PiecewiseCurve& curve, const ProblemInstance& inst, double s) {
  const CurveSample x = evaluate(curve, s);
  const Point2 p = to_frame(inst.frame(), x.point);
  const double phi = heading(curve, inst, s);
  const double sp = std::sin(phi);
  if (sp < 1e-12) fail(ErrorCode::kUndefinedAtS, "tangent parallel to alpha at this abscissa");
  return {p.x - p.y * std::cos(phi) / sp, p.y / sp};
}

Certificate certify(const PiecewiseCurve& curve, const ProblemInstance& inst, int n) {
  Certificate cert;
  cert.e = max_curvature(curve);
  cert.support_min_residual = support_check(curve, n);
  const UV uv = uv_functions(curve, inst, curve.length());
  cert.u0 = uv.u;
  cert.v0 = uv.v;
  cert.uv_positive = uv.u > 0.0 && uv.v > 0.0;

  const OptimalSolution X = synthesize(inst);
  try {
    cert.zeta0 = zeta_profile(inst, X, curve, n).back();
    cert.theta_phi_max_excess = theta_phi_bound(inst, X, curve, n);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kHypothesisViolated) throw;
  }
  return cert;
}

}  // namespace mmc
