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

#include <span>

#include "smallball/modes.hpp"

// Checks for 1-D measures with a step density g. For such measures the ratio
// f(x, r) / (2r) tends to g(x) at every interior point, and the translate
// ratio f(u - v, r) / f(u, r) tends to g(u - v) / g(u), the Radon-Nikodym
// derivative of the shifted measure.

namespace smallball {

/// g(x) for a 1-D measure: the height of the piece whose open interior holds x, else 0.
double density_at(const Measure& m, double x);

/// f(u, r) / (2r) equals `expected_density` within tol on the schedule tail.
/// u must lie in a piece at distance > max radius from its endpoints.
bool lebesgue_ratio_check(const SmallBallMap& f, const Point& u, const RadiusSchedule& sched,
                          double expected_density, double tol);

/// The tail of f(u - v, r) / f(u, r) equals g(u - v) / g(u) within tol. Both u
/// and u - v must sit in pieces, at distance > max radius from their
/// endpoints, and g(u) > 0.
bool rn_limit_check(const SmallBallMap& f, const Point& u, double shift,
                    const RadiusSchedule& sched, double tol);

/// max over shifts of g(u - v) / g(u).
double max_rn_value(const Measure& m, const Point& u, std::span<const double> shifts);

/// At a point whose weak-mode check over `shifts` is Satisfied, the largest
/// sampled Radon-Nikodym value is at most 1 + tol. Returns true when the
/// check is not Satisfied (the bound then says nothing).
bool rn_bound_at_weak_mode(const SmallBallMap& f, const Point& u, std::span<const double> shifts,
                           const RadiusSchedule& sched, double tol);

}  // namespace smallball
