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

#include "smallball/density_checks.hpp"

#include <algorithm>
#include <cmath>

namespace smallball {

namespace {

const Interval* piece_containing(const Measure& m, double x) {
  for (const auto& iv : m.intervals()) {
    if (iv.lo() < x && x < iv.hi()) {
      return &iv;
    }
  }
  return nullptr;
}

void require_interior(const SmallBallMap& f, double x, double margin, const char* what) {
  if (f.dim() != 1) {
    throw DimensionMismatch("density checks need a 1-D measure");
  }
  const Interval* piece = piece_containing(f.measure(), x);
  if (piece == nullptr || !(x - piece->lo() > margin && piece->hi() - x > margin)) {
    throw std::invalid_argument(std::string(what) +
                                " must be interior to a piece, farther than the largest radius "
                                "from its endpoints");
  }
}

}  // namespace

double density_at(const Measure& m, double x) {
  if (m.dim() != 1) {
    throw DimensionMismatch("density_at needs a 1-D measure");
  }
  const Interval* piece = piece_containing(m, x);
  return piece == nullptr ? 0.0 : piece->height();
}

bool lebesgue_ratio_check(const SmallBallMap& f, const Point& u, const RadiusSchedule& sched,
                          double expected_density, double tol) {
  require_interior(f, u.x(), sched.max_radius(), "u");
  const auto tail = sched.radii().last(sched.tail_window());
  return std::all_of(tail.begin(), tail.end(), [&](double r) {
    return std::abs(f(u, r) / (2.0 * r) - expected_density) <= tol;
  });
}

bool rn_limit_check(const SmallBallMap& f, const Point& u, double shift,
                    const RadiusSchedule& sched, double tol) {
  const Point z = u - Point(shift);
  require_interior(f, u.x(), sched.max_radius(), "u");
  require_interior(f, z.x(), sched.max_radius(), "u - v");
  const double g_u = density_at(f.measure(), u.x());
  if (!(g_u > 0.0)) {
    throw NotInSupport("density vanishes at u");
  }
  const double expected = density_at(f.measure(), z.x()) / g_u;
  const auto trace = ratio_trace(f, u, z, sched);
  const auto tail = std::span<const RatioRow>(trace.rows).last(sched.tail_window());
  return std::all_of(tail.begin(), tail.end(),
                     [&](const RatioRow& row) { return std::abs(row.ratio - expected) <= tol; });
}

double max_rn_value(const Measure& m, const Point& u, std::span<const double> shifts) {
  const double g_u = density_at(m, u.x());
  if (!(g_u > 0.0)) {
    throw NotInSupport("density vanishes at u");
  }
  double best = 0.0;
  for (const double v : shifts) {
    best = std::max(best, density_at(m, u.x() - v) / g_u);
  }
  return best;
}

bool rn_bound_at_weak_mode(const SmallBallMap& f, const Point& u, std::span<const double> shifts,
                           const RadiusSchedule& sched, double tol) {
  std::vector<Point> vs;
  for (const double v : shifts) {
    vs.emplace_back(v);
  }
  const auto verdict = check_weak_mode(f, u, TranslationSet(vs), sched, tol);
  if (verdict.status != Status::Satisfied) {
    return true;
  }
  return max_rn_value(f.measure(), u, shifts) <= 1.0 + tol;
}

}  // namespace smallball
