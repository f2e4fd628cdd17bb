/*
   Copyright 2026 The smallball Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smallball/measure.hpp"
#include "smallball/philox.hpp"

// Brute-force ball-mass estimators, independent of the clipping kernel in
// measure.cpp: they only ever test point membership with Ball::contains.

namespace smallball::oracle {

struct McConfig {
  std::uint64_t n_samples = 100'000;
  std::uint64_t seed = 0;
};

struct McEstimate {
  double estimate;
  double std_error;
};

/// Samples a component with probability proportional to its mass, then a
/// point uniformly along it; estimate = total mass x hit fraction, with the
/// binomial standard error. Sample i always uses Philox block i of `seed`, so
/// the result does not depend on `workers`.
McEstimate mc_ball_mass(const Measure& m, const Ball& b, const McConfig& cfg,
                        unsigned workers = 1);

/// Splits every component into `subdivisions` equal pieces and sums the mass
/// of the pieces whose midpoints lie in the ball.
double quadrature_ball_mass(const Measure& m, const Ball& b, std::uint64_t subdivisions);

/// Bound on |quadrature - exact|: 4 x component mass / subdivisions, summed.
double quadrature_error_bound(const Measure& m, std::uint64_t subdivisions);

/// Random planar measure: 1..max_segments segments in [-1, 1]^2, densities in [0.1, 2].
Measure random_segment_measure(UniformStream& rng, int max_segments = 6);

/// Random step density: 1..max_pieces disjoint pieces in [-2, 2], heights in [0.1, 3].
Measure random_step_measure(UniformStream& rng, int max_pieces = 5);

struct OracleCase {
  std::string id;
  Measure measure;
  Ball ball;
};

/// Deterministic mix of planar (three norms) and 1-D cases.
std::vector<OracleCase> random_oracle_cases(std::uint64_t seed, int count);

}  // namespace smallball::oracle
