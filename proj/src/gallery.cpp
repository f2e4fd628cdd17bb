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

#include "smallball/gallery.hpp"

#include <cmath>
#include <stdexcept>

namespace smallball::gallery {

namespace {

void validate(const CrossedSquaresParams& p) {
  if (!(p.alpha > 0.0 && p.alpha < 1.0)) {
    throw std::invalid_argument("crossed squares need alpha in (0, 1)");
  }
  if (p.n_crosses < 1 || p.n_crosses > 40) {
    throw std::invalid_argument("crossed squares need 1 <= n_crosses <= 40");
  }
}

void validate(const NoModeParams& p) {
  if (!(p.a > 1.0 && p.b > p.a && p.b > 2.0) || !std::isfinite(p.b)) {
    throw std::invalid_argument("no-mode density needs 1 < a < b and b > 2");
  }
  if (p.n_pieces < 1) {
    throw std::invalid_argument("no-mode density needs at least one piece");
  }
  // The narrowest piece must stay wider than the 1e-12 radius guard.
  if (static_cast<double>(p.n_pieces) * std::log(p.b) > 25.0 * std::log(10.0)) {
    throw std::invalid_argument("no-mode pieces would be narrower than 1e-25");
  }
}

// Standard normal mass of [lo, hi], computed from the nearer tail.
double normal_mass(double lo, double hi) {
  const double s = 1.0 / std::sqrt(2.0);
  if (lo >= 0.0) {
    return 0.5 * (std::erfc(lo * s) - std::erfc(hi * s));
  }
  if (hi <= 0.0) {
    return 0.5 * (std::erfc(-hi * s) - std::erfc(-lo * s));
  }
  return 1.0 - 0.5 * std::erfc(-lo * s) - 0.5 * std::erfc(hi * s);
}

bool is_centre(const Point& c, const Point& v) { return c.dim() == v.dim() && c == v; }

}  // namespace

Point crossed_squares_centre(int n) {
  if (n < 0) {
    throw std::invalid_argument("crossed square index must be >= 0");
  }
  // sum_{m<n} 2^-m = 2 - 2^(1-n), exact in binary.
  return Point(2.0 - std::ldexp(1.0, 1 - n), 0.0);
}

Point crossed_squares_case_point(int n, CrossedSquaresCase which) {
  const Point v = crossed_squares_centre(n);
  const double h = std::ldexp(1.0, -(n + 1));
  switch (which) {
    case CrossedSquaresCase::CrossArm: return v + Point(h / 2.0, 0.0);
    case CrossedSquaresCase::SquareEdge: return v + Point(h, h / 2.0);
    case CrossedSquaresCase::ArmEdgeJoint: return v + Point(h, 0.0);
  }
  return v;
}

Measure build_crossed_squares(const CrossedSquaresParams& p) {
  validate(p);
  std::vector<Segment> segs;
  segs.reserve(6 * static_cast<std::size_t>(p.n_crosses));
  const double edge_density = p.alpha / 2.0;
  for (int n = 0; n < p.n_crosses; ++n) {
    const double x = crossed_squares_centre(n).x();
    const double h = std::ldexp(1.0, -(n + 1));
    segs.emplace_back(Point(x - h, 0.0), Point(x + h, 0.0), 1.0);
    segs.emplace_back(Point(x, -h), Point(x, h), 1.0);
    segs.emplace_back(Point(x - h, -h), Point(x + h, -h), edge_density);
    segs.emplace_back(Point(x + h, -h), Point(x + h, h), edge_density);
    segs.emplace_back(Point(x + h, h), Point(x - h, h), edge_density);
    segs.emplace_back(Point(x - h, h), Point(x - h, -h), edge_density);
  }
  return Measure::planar(std::move(segs), "crossed-squares");
}

double no_mode_normalizer(const NoModeParams& p) {
  validate(p);
  double sum = 0.0;
  for (int n = 1; n <= p.n_pieces; ++n) {
    sum += std::pow(p.a, -n);
  }
  return sum;
}

double no_mode_height(const NoModeParams& p, int n) {
  return std::pow(p.b / p.a, n) / (2.0 * no_mode_normalizer(p));
}

Measure build_no_mode_density(const NoModeParams& p) {
  validate(p);
  std::vector<Interval> pieces;
  for (int n = 1; n <= p.n_pieces; ++n) {
    const double w = std::pow(p.b, -n);
    pieces.emplace_back(n - w, n + w, no_mode_height(p, n));
  }
  return Measure::linear(std::move(pieces), "no-mode");
}

Measure build_k_dependence() {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<Segment> segs{
      Segment(Point(-1.0 - s, -s), Point(-1.0 + s, s), 1.0),
      Segment(Point(-1.0 - s, s), Point(-1.0 + s, -s), 1.0),
      Segment(Point(0.0, 0.0), Point(2.0, 0.0), 1.0),
      Segment(Point(1.0, -1.0), Point(1.0, 1.0), 1.0),
  };
  return Measure::planar(std::move(segs), "k-dependence");
}

Measure build_two_line_gaussian(int m_segments) {
  if (m_segments < 1) {
    throw std::invalid_argument("two-line gaussian needs at least one cell per line");
  }
  constexpr double kHalfSpan = 8.0;
  std::vector<Segment> segs;
  segs.reserve(2 * static_cast<std::size_t>(m_segments));
  for (const double x : {-1.0, 1.0}) {
    for (int i = 0; i < m_segments; ++i) {
      const double lo = -kHalfSpan + 2.0 * kHalfSpan * i / m_segments;
      const double hi = -kHalfSpan + 2.0 * kHalfSpan * (i + 1) / m_segments;
      const double mass = 0.5 * normal_mass(lo, hi);
      segs.emplace_back(Point(x, lo), Point(x, hi), mass / (hi - lo));
    }
  }
  return Measure::planar(std::move(segs), "two-line-gaussian");
}

double crossed_squares_cross_only_radius(const CrossedSquaresParams& p, int n) {
  validate(p);
  if (n < 0 || n >= p.n_crosses) {
    throw std::invalid_argument("crossed square index out of range");
  }
  const Measure m = build_crossed_squares(p);
  const Point v = crossed_squares_centre(n);
  const auto cross_only = [&](double r) {
    return std::abs(ball_mass(m, Ball(v, r, Norm::Linf)) - 4.0 * r) <= 1e-12 * r;
  };
  // Walk down dyadically to the first radius holding only cross mass, then
  // bisect between it and its double.
  double good = 1.0;
  while (!cross_only(good)) {
    good /= 2.0;
    if (good < 1e-12) {
      throw std::runtime_error("no cross-only radius found");
    }
  }
  double bad = 2.0 * good;
  if (cross_only(bad)) {
    return bad;
  }
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (good + bad);
    (cross_only(mid) ? good : bad) = mid;
  }
  return good;
}

GalleryId parse_gallery_id(std::string_view text) {
  if (text == "crossed-squares") return GalleryId::CrossedSquares;
  if (text == "no-mode") return GalleryId::NoMode;
  if (text == "k-dependence") return GalleryId::KDependence;
  if (text == "two-line-gaussian") return GalleryId::TwoLineGaussian;
  throw std::invalid_argument("unknown gallery id '" + std::string(text) + "'");
}

std::string_view to_string(GalleryId id) {
  switch (id) {
    case GalleryId::CrossedSquares: return "crossed-squares";
    case GalleryId::NoMode: return "no-mode";
    case GalleryId::KDependence: return "k-dependence";
    case GalleryId::TwoLineGaussian: return "two-line-gaussian";
  }
  return "?";
}

std::vector<std::string_view> gallery_ids() {
  return {"crossed-squares", "no-mode", "k-dependence", "two-line-gaussian"};
}

Measure build(const GallerySpec& spec) {
  switch (spec.id) {
    case GalleryId::CrossedSquares: return build_crossed_squares(spec.crossed);
    case GalleryId::NoMode: return build_no_mode_density(spec.no_mode);
    case GalleryId::KDependence: return build_k_dependence();
    case GalleryId::TwoLineGaussian: return build_two_line_gaussian(spec.gaussian_segments);
  }
  throw std::invalid_argument("unknown gallery id");
}

std::optional<double> expected_mass(const GallerySpec& spec, const Point& center, double r,
                                    Norm norm) {
  if (!(r > 0.0)) {
    return std::nullopt;
  }
  switch (spec.id) {
    case GalleryId::CrossedSquares: {
      const auto& p = spec.crossed;
      validate(p);
      for (int n = 0; n < p.n_crosses; ++n) {
        if (!is_centre(center, crossed_squares_centre(n))) {
          continue;
        }
        const double h = std::ldexp(1.0, -(n + 1));
        if (r <= h) {
          return 4.0 * r;
        }
        if (norm == Norm::Linf && r < 1.5 * h) {
          return (1.0 + p.alpha) * std::ldexp(1.0, 1 - n);
        }
      }
      return std::nullopt;
    }
    case GalleryId::NoMode: {
      const auto& p = spec.no_mode;
      for (int n = 1; n <= p.n_pieces; ++n) {
        if (is_centre(center, Point(static_cast<double>(n))) && r <= std::pow(p.b, -n)) {
          return 2.0 * r * no_mode_height(p, n);
        }
      }
      return std::nullopt;
    }
    case GalleryId::KDependence: {
      if (!(r < 0.5)) {
        return std::nullopt;
      }
      if (is_centre(center, Point(1.0, 0.0))) {
        return 4.0 * r;
      }
      if (is_centre(center, Point(-1.0, 0.0))) {
        switch (norm) {
          case Norm::L1: return 2.0 * std::sqrt(2.0) * r;
          case Norm::Linf: return 4.0 * std::sqrt(2.0) * r;
          case Norm::L2: return 4.0 * r;
        }
      }
      return std::nullopt;
    }
    case GalleryId::TwoLineGaussian: {
      if (center.dim() == 2 && center.x() == 0.0 && r < 1.0) {
        return 0.0;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::vector<Point> points_of_interest(const GallerySpec& spec) {
  std::vector<Point> out;
  switch (spec.id) {
    case GalleryId::CrossedSquares:
      for (int n = 0; n < spec.crossed.n_crosses; ++n) {
        out.push_back(crossed_squares_centre(n));
      }
      for (int n = 0; n < spec.crossed.n_crosses; ++n) {
        for (auto c : {CrossedSquaresCase::CrossArm, CrossedSquaresCase::SquareEdge,
                       CrossedSquaresCase::ArmEdgeJoint}) {
          out.push_back(crossed_squares_case_point(n, c));
        }
      }
      break;
    case GalleryId::NoMode:
      for (int n = 1; n <= spec.no_mode.n_pieces; ++n) {
        out.emplace_back(static_cast<double>(n));
      }
      break;
    case GalleryId::KDependence: {
      const double s = 0.5 / std::sqrt(2.0);
      out = {Point(-1.0, 0.0), Point(1.0, 0.0),      Point(1.5, 0.0),
             Point(1.0, 0.5),  Point(-1.0 + s, s), Point(-1.0 - s, s)};
      break;
    }
    case GalleryId::TwoLineGaussian:
      out = {Point(-1.0, 0.0), Point(1.0, 0.0)};
      break;
  }
  return out;
}

}  // namespace smallball::gallery
