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

// Constant-distance offsets of arc/segment chains and SVG export.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "mmc/curve.hpp"

namespace mmc {

struct OffsetResult {
  PiecewiseCurve left;   // on the rot90(tangent) side
  PiecewiseCurve right;
  double distance = 0.0;
  /// Some arc has radius <= distance on its inner side. The affected side
  /// then has cusps (tangent reversals) and is only position-continuous.
  bool degenerate = false;
};

/// Exact offset: segments shift along their normal, arcs become concentric
/// arcs of radius R -+ d. Throws InvalidInput for d <= 0 or an empty curve.
OffsetResult offset(const PiecewiseCurve& curve, double d);

struct SvgStyle {
  std::vector<std::string> strokes{"#1f77b4", "#d62728", "#2ca02c"};  // cycled per curve
  double stroke_width = 0.004;  // fraction of the larger viewBox side
};

/// SVG 1.1 document with one <path> per non-empty curve. Arcs are emitted as
/// native elliptical-arc commands, y is flipped (model y-up, document
/// y-down) and the viewBox covers all geometry with a 5% margin. Numbers use
/// 9 significant digits, so output is byte-deterministic.
std::string to_svg(std::span<const PiecewiseCurve> curves, const SvgStyle& style = {});

/// Locale-independent shortest form with at most 9 significant digits.
std::string format_svg_number(double v);

}  // namespace mmc
