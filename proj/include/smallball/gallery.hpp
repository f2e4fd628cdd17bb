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
#include <string>
#include <string_view>
#include <vector>

#include "smallball/measure.hpp"

namespace smallball::gallery {

/// A geometric sequence of crosses C_n (density 1) framed by squares S_n
/// (density alpha / 2), centred at v_n = (sum_{m<n} 2^-m, 0), with arm
/// half-length and square half-side 2^-(n+1).
struct CrossedSquaresParams {
  double alpha = 0.875;
  int n_crosses = 12;
};

/// Step density with height (b/a)^n / (2 A_N) on (n - b^-n, n + b^-n),
/// n = 1..N, A_N = sum_{n<=N} a^-n. The truncated measure has mass exactly 1.
struct NoModeParams {
  double a = 2.0;
  double b = 4.0;
  int n_pieces = 16;
};

Measure build_crossed_squares(const CrossedSquaresParams& p);
Measure build_no_mode_density(const NoModeParams& p);

/// Uniform length measure on two unit-half-length crosses: one rotated by 45
/// degrees at (-1, 0), one axis-aligned at (1, 0).
Measure build_k_dependence();

/// Two standard normal line densities of weight 1/2 on x = -1 and x = +1,
/// each cut into `m_segments` constant-density cells over y in [-8, 8].
Measure build_two_line_gaussian(int m_segments = 400);

Point crossed_squares_centre(int n);

/// Points on the n-th crossed square realising the three non-trivial local
/// pictures: an interior cross point, a square-edge point off the cross, and
/// the joint where a cross arm meets the square.
enum class CrossedSquaresCase { CrossArm, SquareEdge, ArmEdgeJoint };
Point crossed_squares_case_point(int n, CrossedSquaresCase which);

double no_mode_normalizer(const NoModeParams& p);
double no_mode_height(const NoModeParams& p, int n);

/// Largest radius R such that the sup-norm ball around v_n holds only cross
/// mass (f(v_n, r) = 4r) for all r <= R, located by bisection.
double crossed_squares_cross_only_radius(const CrossedSquaresParams& p, int n);

enum class GalleryId { CrossedSquares, NoMode, KDependence, TwoLineGaussian };

GalleryId parse_gallery_id(std::string_view text);
std::string_view to_string(GalleryId id);
std::vector<std::string_view> gallery_ids();

struct GallerySpec {
  GalleryId id = GalleryId::KDependence;
  CrossedSquaresParams crossed;
  NoModeParams no_mode;
  int gaussian_segments = 400;
};

Measure build(const GallerySpec& spec);

/// Closed-form ball mass where the construction's case analysis covers
/// (center, r, norm); nullopt otherwise.
std::optional<double> expected_mass(const GallerySpec& spec, const Point& center, double r,
                                    Norm norm);

/// Distinguished points of a construction: centres, case points, arm midpoints.
std::vector<Point> points_of_interest(const GallerySpec& spec);

}  // namespace smallball::gallery
