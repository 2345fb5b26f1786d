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

#include "mmc/random.hpp"

namespace mmc {

ProblemInstance random_instance(std::mt19937_64& rng, const RandomInstanceRange& range) {
  std::uniform_real_distribution<double> box(-range.center_box, range.center_box);
  std::uniform_real_distribution<double> heading(-kPi, kPi);
  std::uniform_real_distribution<double> turn(range.omega_min, range.omega_max);
  std::uniform_real_distribution<double> dist(range.dist_min, range.dist_max);
  const Point2 O{box(rng), box(rng)};
  const double h = heading(rng);
  const double omega = turn(rng);
  const double oa = dist(rng);
  const double ob = dist(rng);
  const Vec2 alpha = unit_vector(h);
  const Vec2 beta = unit_vector(h + omega);
  return make_instance(O, O - alpha * oa, O + beta * ob);
}

}  // namespace mmc
