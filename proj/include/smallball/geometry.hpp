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

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace smallball {

/// Raised when a point, ball or measure of one dimension meets another.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point of R^1 or R^2. Coordinates are always finite.
class Point {
 public:
  Point() = default;
  explicit Point(double x);
  Point(double x, double y);

  /// Builds a point from 1 or 2 coordinates.
  static Point from(std::span<const double> coords);

  int dim() const { return dim_; }
  double x() const { return c_[0]; }
  double y() const { return c_[1]; }
  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Point&, const Point&) = default;

  friend Point operator+(const Point& a, const Point& b);
  friend Point operator-(const Point& a, const Point& b);
  friend Point operator*(double s, const Point& a);

  std::string to_string() const;

 private:
  std::array<double, 2> c_{0.0, 0.0};
  int dim_ = 2;
};

/// Unit ball shapes: the diamond, the disk and the square.
enum class Norm { L1, L2, Linf };

Norm parse_norm(std::string_view text);
std::string_view to_string(Norm norm);

/// Distance |a - b| in the given norm; the norm is ignored in dimension 1.
double distance(const Point& a, const Point& b, Norm norm);

/// Smallest radius accepted anywhere in the library.
inline constexpr double kMinRadius = 1e-12;

/// The open ball center + radius * K, where K is the unit ball of `norm`.
/// In dimension 1 every norm gives the open interval (c - r, c + r).
class Ball {
 public:
  Ball(Point center, double radius, Norm norm = Norm::Linf);

  const Point& center() const { return center_; }
  double radius() const { return radius_; }
  Norm norm() const { return norm_; }
  int dim() const { return center_.dim(); }

  /// Strict membership; the boundary is excluded.
  bool contains(const Point& p) const;

 private:
  Point center_;
  double radius_;
  Norm norm_;
};

/// Axis-aligned box [lo, hi] in the first `dim` coordinates.
struct Box {
  int dim = 2;
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{0.0, 0.0};

  Box inflated(double by) const;
  bool covers(const Box& other) const;
  bool empty() const { return lo[0] > hi[0] || (dim == 2 && lo[1] > hi[1]); }
};

}  // namespace smallball
