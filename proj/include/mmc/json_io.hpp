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

// JSON encodings of instances, curves and reports.
//
// Instance: {"A":[x,y],"B":[x,y],"O":[x,y]} or
//           {"A":[x,y],"alpha":[x,y],"B":[x,y],"beta":[x,y]}
// Curve:    {"primitives":[{"type":"segment","start":[x,y],"end":[x,y]} |
//            {"type":"arc","center":[x,y],"radius":r,"startAngle":a,"sweep":w}, ...]}
//
// Every number written is rounded to 15 significant digits.

#pragma once

#include <json.hpp>

#include <string>

#include "mmc/baselines.hpp"
#include "mmc/certificates.hpp"
#include "mmc/curve.hpp"
#include "mmc/dubins.hpp"
#include "mmc/optimal.hpp"
#include "mmc/problem.hpp"

namespace mmc {

using Json = nlohmann::json;

/// Rounds to 15 significant digits.
double round15(double v);

/// Serializes like Json::dump(indent) but prints floats with 15 significant
/// digits (shortest form of the rounded value). Ends without a newline.
std::string dump_json(const Json& j, int indent = 2);

/// Throws InvalidInput on schema violations.
ProblemInstance instance_from_json(const Json& j);
/// Caller-facing orientation (the normalization swap is undone).
Json instance_to_json(const ProblemInstance& inst);

Point2 point_from_json(const Json& j);
Json point_to_json(const Point2& p);

PiecewiseCurve curve_from_json(const Json& j);
Json curve_to_json(const PiecewiseCurve& curve);

/// Solution reported in the caller's orientation.
Json solution_to_json(const OptimalSolution& sol, const ProblemInstance& inst);
Json membership_to_json(const MembershipReport& r);
Json certificate_to_json(const Certificate& c);
Json sweep_to_json(const SweepReport& r);
Json comparison_to_json(const ComparisonReport& r);

}  // namespace mmc
