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

// Executable forms of the optimality argument:
//   - support-line (convexity) residual gamma(s, t) = <X(t) - X(s), rot90(X'(s))>,
//   - the normal offset zeta(s) of a competitor Z from the optimal X on the
//     circular part [0, l], l = R_a * Omega, and its end value zeta0,
//   - the heading bound theta(s) - phi(s) <= (e - 1/R_a) s,
//   - the closed affine form of zeta0 for the two-arc composite family,
//   - the tangent-line intersection parameters u(s), v(s).
//
// Curves whose optimal arc is at B (OA > OB) are handled by mirroring the
// scene and traversing it backwards, which puts the arc at A.

#pragma once

#include <optional>
#include <vector>

#include "mmc/curve.hpp"
#include "mmc/optimal.hpp"
#include "mmc/problem.hpp"

namespace mmc {

/// Minimum of gamma over an (n + 1) x (n + 1) grid of arc lengths. Non-negative
/// (up to rounding) for positively curved admissible curves.
double support_check(const PiecewiseCurve& curve, int n = 256);

struct ZetaOptions {
  /// Reject competitors whose maximum curvature exceeds 1 / R_a.
  bool enforce_hypothesis = true;
};

/// zeta on [0, l] at n + 1 equally spaced abscissae; the last value is zeta0.
/// Z must start at A with tangent alpha and be at least l long. When X is
/// segment first the problem is mirrored and reversed so the arc leads; Z is
/// then read backwards and must end at B with tangent beta.
/// Throws HypothesisViolated otherwise, or when e > 1 / R_a and the
/// hypothesis is enforced.
std::vector<double> zeta_profile(const ProblemInstance& inst, const OptimalSolution& X,
                                 const PiecewiseCurve& Z, int n = 2048,
                                 const ZetaOptions& options = {});

/// max over s in (0, l] of theta(s) - phi(s) - (e - 1/R_a) s. Same
/// preconditions as zeta_profile.
double theta_phi_bound(const ProblemInstance& inst, const OptimalSolution& X,
                       const PiecewiseCurve& Z, int n = 2048, const ZetaOptions& options = {});

struct ZetaCoefficients {
  double a = 0.0;  // cos(Omega) - cos(Omega/2)
  double b = 0.0;  // cos(Omega/2) - 1
  double c = 0.0;  // -sin(Omega)
  double f = 0.0;  // -sin(Omega/2)
};

ZetaCoefficients zeta_coefficients(double omega) noexcept;

/// zeta0 = a (R1 - R_a) + b (R2 - R_a) + c d1 + f d2 for the composite
/// (d1, R1, d2, R2) with Omega/2 sweeps, measured against the tangent line
/// at B. When OA > OB the optimal curve starts with a straight run of length
/// OA - OB, which enters as d1 -> d1 - (OA - OB).
double zeta0_closed_form(const ProblemInstance& inst, double R1, double R2, double d1, double d2);

/// Same quantity obtained by building the composite chain and projecting its
/// end (after the second arc) onto the outward normal at B.
double zeta0_geometric(const ProblemInstance& inst, double R1, double R2, double d1, double d2);

struct UV {
  double u = 0.0;  // A Q(s) = u alpha
  double v = 0.0;  // Q(s) X(s) = v X'(s)
};

/// Intersection of the tangent line at X(s) with the line (A, alpha).
/// Throws UndefinedAtS when sin(phi(s)) < 1e-12.
UV uv_functions(const PiecewiseCurve& curve, const ProblemInstance& inst, double s);

struct Certificate {
  std::optional<double> zeta0;  // absent when the curvature hypothesis fails
  double support_min_residual = 0.0;
  std::optional<double> theta_phi_max_excess;
  double u0 = 0.0;
  double v0 = 0.0;
  bool uv_positive = false;
  double e = 0.0;
};

/// All certificates for `curve` against the optimal curve of `inst`.
Certificate certify(const PiecewiseCurve& curve, const ProblemInstance& inst, int n = 256);

}  // namespace mmc
