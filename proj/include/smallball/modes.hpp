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

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smallball/geometry.hpp"
#include "smallball/measure.hpp"

// Mode classification from finite radius schedules.
//
// Every check here replaces a limit r -> 0 by the tail of a strictly
// decreasing radius schedule, and a supremum over a (possibly dense) set by a
// maximum over a finite sample. Verdicts are therefore statements "over the
// sample": a Satisfied E-weak verdict says no sampled translate beats u on the
// tail, not that no translate in E does. Conclusions for a dense E follow
// analytically from the fact that f(., r) is lower semicontinuous, which
// makes the supremum over a dense set equal the supremum over the space.

namespace smallball {

/// f(u, r) vanished on a scheduled radius, so u is not (numerically) in the support.
class NotInSupport : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A translate set or search grid materialized to no points.
class EmptySet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Strictly decreasing radii standing in for r -> 0. Limits are read off the
/// last `tail_window` entries.
class RadiusSchedule {
 public:
  RadiusSchedule(std::vector<double> radii, std::size_t tail_window = 6);

  /// r_k = r0 * 2^-k for k = 0..k_max.
  static RadiusSchedule dyadic(double r0 = 0.5, int k_max = 24, std::size_t tail_window = 6);

  /// r_n = 1.25 * 2^-(n+1) for n = first .. first + count - 1. Each radius sits
  /// strictly inside (2^-(n+1), 3 * 2^-(n+2)), the band on which the n-th
  /// crossed square is wholly inside the sup-norm ball around its centre.
  static RadiusSchedule band(int first, int count, std::size_t tail_window = 6);

  /// r_k = r0 * factor^k for k = 0..count-1, factor in (0, 1).
  static RadiusSchedule geometric(double r0, double factor, int count,
                                  std::size_t tail_window = 6);

  std::span<const double> radii() const { return radii_; }
  std::size_t size() const { return radii_.size(); }
  std::size_t tail_window() const { return tail_window_; }
  double max_radius() const { return radii_.front(); }
  double min_radius() const { return radii_.back(); }

 private:
  std::vector<double> radii_;
  std::size_t tail_window_;
};

struct GridSpec {
  Box box;
  double spacing = 0.0;
};

/// A finite sample of a translate set E, or of the space when used as a search
/// grid: an explicit list plus an optional regular grid. `dense_intent`
/// records that the sample stands for a topologically dense set.
class TranslationSet {
 public:
  TranslationSet() = default;
  explicit TranslationSet(std::vector<Point> points, std::optional<GridSpec> grid = std::nullopt,
                          bool dense_intent = false);

  static TranslationSet grid(const Box& box, double spacing, bool dense_intent = true);

  const std::vector<Point>& explicit_points() const { return points_; }
  const std::optional<GridSpec>& grid_spec() const { return grid_; }
  bool dense_intent() const { return dense_intent_; }

  /// Explicit points first, then the grid in row-major order.
  std::vector<Point> materialize(int dim) const;

 private:
  std::vector<Point> points_;
  std::optional<GridSpec> grid_;
  bool dense_intent_ = false;
};

/// Grid over the support box inflated by the largest scheduled radius, with
/// spacing min_radius / 4 unless that exceeds `max_per_axis` points per axis.
TranslationSet auto_search_grid(const Measure& m, const RadiusSchedule& sched,
                                std::size_t max_per_axis = 512);

/// The evaluation map f(x, r) = mu(x + rK) for a measure and a unit-ball shape.
class SmallBallMap {
 public:
  SmallBallMap(Measure measure, Norm norm);

  double operator()(const Point& x, double r) const;

  const Measure& measure() const { return measure_; }
  Norm norm() const { return norm_; }
  int dim() const { return measure_.dim(); }

 private:
  Measure measure_;
  Norm norm_;
};

struct SupResult {
  double value = 0.0;
  std::size_t index = 0;
};

/// Maximum of f(., r) over `points`; the first maximiser wins ties.
SupResult sup_over(const SmallBallMap& f, std::span<const Point> points, double r);

struct RatioRow {
  double r;
  double numerator;
  double denominator;
  double ratio;
};

/// Per-radius ratios f_num / f(u, r). `z` is empty when the numerator is a
/// supremum over a set.
struct RatioTrace {
  Point u;
  std::optional<Point> z;
  std::vector<RatioRow> rows;

  std::string to_csv() const;
};

struct LimitEstimate {
  double limit;
  double limsup;
  double liminf;
  bool inconclusive;
};

enum class Status { Satisfied, Violated, Inconclusive };

std::string_view to_string(Status s);

struct Verdict {
  Status status = Status::Inconclusive;
  double limsup_est = 0.0;
  double liminf_est = 0.0;
  double tol = 0.0;
  std::vector<RatioTrace> evidence;
  std::optional<Point> worst_translate;
};

inline constexpr double kDefaultTol = 1e-6;

/// Rows f(z, r) / f(u, r) over the schedule. Throws NotInSupport if f(u, r) = 0.
RatioTrace ratio_trace(const SmallBallMap& f, const Point& u, const Point& z,
                       const RadiusSchedule& sched);

/// Mean, max and min of the last `tail_window` ratios. Flags the estimate as
/// inconclusive when the tail spreads by more than tol and straddles 1 + tol.
LimitEstimate estimate_limit(const RatioTrace& trace, std::size_t tail_window, double tol);

/// E-weak mode: every sampled v in E has tail limsup of f(u-v, r)/f(u, r) <= 1 + tol.
Verdict check_weak_mode(const SmallBallMap& f, const Point& u, const TranslationSet& translates,
                        const RadiusSchedule& sched, double tol = kDefaultTol);

/// Strong mode: sup over the grid (plus u itself) of f(z, r), divided by
/// f(u, r), stays within tol of 1 on the tail. The grid, when given as a
/// GridSpec, must cover the support box inflated by the largest radius. In
/// dimension 1 the supremum over R is computed exactly from the breakpoints
/// of the piecewise-linear map z -> f(z, r), in addition to the grid.
Verdict check_strong_mode(const SmallBallMap& f, const Point& u, const TranslationSet& search_grid,
                          const RadiusSchedule& sched, double tol = kDefaultTol);

/// E-strong mode: sup over z in u - E of f(z, r), divided by f(u, r), has tail
/// limsup <= 1 + tol.
Verdict check_E_strong_mode(const SmallBallMap& f, const Point& u,
                            const TranslationSet& translates, const RadiusSchedule& sched,
                            double tol = kDefaultTol);

/// Bounded neighbourhood V = B(0, radius) in the given norm.
struct Neighbourhood {
  Norm norm = Norm::L2;
  double radius = 0.25;
};

/// Local strong mode: as check_strong_mode with the supremum restricted to
/// grid points z with |z - u| < V.radius in V's norm.
Verdict check_local_mode(const SmallBallMap& f, const Point& u, const Neighbourhood& neighbourhood,
                         const RadiusSchedule& sched, double tol,
                         const TranslationSet& search_grid);

/// Uniformity: for every scheduled r < r_star and every sampled v,
/// f(u - v_star, r) >= f(u - v, r) - tol * f(u, r). The verdict's limsup and
/// liminf are the extreme values of the deficit
/// (max_v f(u - v, r) - f(u - v_star, r)) / f(u, r).
Verdict check_uniformity(const SmallBallMap& f, const Point& u, const Point& v_star,
                         const TranslationSet& translates, double r_star,
                         const RadiusSchedule& sched, double tol = kDefaultTol);

/// Coincident limiting ratios: the tail ratios of the sup over u - E and of
/// the sup over the grid agree row by row within tol. The limsup/liminf
/// reported are those of the grid ratio.
Verdict check_clr(const SmallBallMap& f, const Point& u, const TranslationSet& translates,
                  const TranslationSet& search_grid, const RadiusSchedule& sched,
                  double tol = kDefaultTol);

/// Lower-semicontinuity probe at fixed r: the last (up to) five approach
/// points satisfy f(x_n, r) >= f(x, r) - tol.
bool lsc_probe(const SmallBallMap& f, const Point& x, double r, std::span<const Point> approach,
               double tol);

}  // namespace smallball
