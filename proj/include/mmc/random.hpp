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

// Seeded random instances for property runs.

#pragma once

#include <random>

#include "mmc/problem.hpp"

namespace mmc {

struct RandomInstanceRange {
  double omega_min = 0.1;
  double omega_max = kPi - 0.1;
  double dist_min = 0.2;   // OA and OB
  double dist_max = 3.0;
  double center_box = 2.0;  // O in [-box, box]^2
};

/// Draws O, a heading for alpha, Omega, OA and OB independently and uniformly.
ProblemInstance random_instance(std::mt19937_64& rng, const RandomInstanceRange& range = {});

}  // namespace mmc
