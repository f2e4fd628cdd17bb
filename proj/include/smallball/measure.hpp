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
#include <string>
#include <vector>

#include "smallball/geometry.hpp"

namespace smallball {

/// Uniform mass on the planar segment [a, b], `density` per unit Euclidean length.
class Segment {
 public:
  Segment(Point a, Point b, double density);

  const Point& a() const { return a_; }
  const Point& b() const { return b_; }
  double density() const { return density_; }
  double length() const;
  double mass() const { return density_ * length(); }

 private:
  Point a_;
  Point b_;
  double density_;
};

/// Constant Lebesgue density `height` on (lo, hi) in R.
class Interval {
 public:
  Interval(double lo, double hi, double height);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double height() const { return height_; }
  double length() const { return hi_ - lo_; }
  double mass() const { return height_ * (hi_ - lo_); }

 private:
  double lo_;
  double hi_;
  double height_;
};

/// A finite mixture of segment components (dimension 2) or interval
/// components (dimension 1). Every bounded set has finite mass because the
/// component list is finite.
class Measure {
 public:
  static Measure planar(std::vector<Segment> segments, std::string label = {});

  /// Intervals must be pairwise disjoint up to shared endpoints.
  static Measure linear(std::vector<Interval> intervals, std::string label = {});

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  std::span<const Segment> segments() const { return segments_; }
  std::span<const Interval> intervals() const { return intervals_; }
  std::size_t size() const { return dim_ == 2 ? segments_.size() : intervals_.size(); }
  bool empty() const { return size() == 0; }

  /// Bounding box of the closed support; an empty box for the empty measure.
  Box bounding_box() const;

 private:
  Measure() = default;

  int dim_ = 2;
  std::string label_;
  std::vector<Segment> segments_;
  std::vector<Interval> intervals_;
};

/// Euclidean length of s inside the open ball b (dimension 2).
double segment_clip_length(const Segment& s, const Ball& b);

/// Length of (lo, hi) inside (c - r, c + r).
double interval_overlap_length(const Interval& iv, const Ball& b);

/// Mass of the open ball: f(x, r) = mu(x + rK).
double ball_mass(const Measure& m, const Ball& b);

double total_mass(const Measure& m);

/// True iff the ball of radius `probe_radius` around x has positive mass.
bool support_contains(const Measure& m, const Point& x, double probe_radius,
                      Norm norm = Norm::Linf);

}  // namespace smallball
