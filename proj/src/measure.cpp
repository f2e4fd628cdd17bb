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

#include "smallball/measure.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace smallball {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Vec {
  double x;
  double y;
};

double dot(Vec u, Vec v) { return u.x * v.x + u.y * v.y; }

// Outward normals of the four edges of the unit square and unit diamond.
constexpr std::array<Vec, 4> kSquareNormals{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
constexpr std::array<Vec, 4> kDiamondNormals{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

// Liang-Barsky clip of p0 + t d, t in [0, 1], against the open polygon
// {x : n.x < r for every normal n}. A segment parallel to an edge and lying
// on its supporting line is outside: the polygon is open.
double clip_polygon(Vec p0, Vec d, double r, const std::array<Vec, 4>& normals,
                    double coord_scale) {
  const double dmax = std::max(std::abs(d.x), std::abs(d.y));
  double t0 = 0.0;
  double t1 = 1.0;
  for (const Vec n : normals) {
    const double nscale = std::abs(n.x) + std::abs(n.y);
    const double den = dot(n, d);
    const double offset = dot(n, p0);
    if (std::abs(den) <= 1e-12 * nscale * dmax) {
      const double snap = 8.0 * kEps * (nscale * coord_scale + r);
      if (offset >= r - snap) {
        return 0.0;
      }
      continue;
    }
    const double t = (r - offset) / den;
    if (den > 0.0) {
      t1 = std::min(t1, t);
    } else {
      t0 = std::max(t0, t);
    }
    if (t1 <= t0) {
      return 0.0;
    }
  }
  return t1 - t0;
}

double clip_disk(Vec p0, Vec d, double r) {
  const double dd = dot(d, d);
  const double len = std::sqrt(dd);
  const double dist = std::abs(p0.x * d.y - p0.y * d.x) / len;
  if (dist >= r) {
    return 0.0;
  }
  const double tc = -dot(p0, d) / dd;
  const double w = std::sqrt((r - dist) * (r + dist)) / len;
  const double t0 = std::max(0.0, tc - w);
  const double t1 = std::min(1.0, tc + w);
  return t1 > t0 ? t1 - t0 : 0.0;
}

}  // namespace

Segment::Segment(Point a, Point b, double density) : a_(a), b_(b), density_(density) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw DimensionMismatch("segment endpoints must be planar points");
  }
  if (a == b) {
    throw std::invalid_argument("segment endpoints must differ");
  }
  if (!(density >= 0.0) || !std::isfinite(density)) {
    throw std::invalid_argument("segment density must be finite and nonnegative");
  }
}

double Segment::length() const { return std::hypot(b_.x() - a_.x(), b_.y() - a_.y()); }

Interval::Interval(double lo, double hi, double height) : lo_(lo), hi_(hi), height_(height) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw std::invalid_argument("interval needs finite lo < hi");
  }
  if (!(height >= 0.0) || !std::isfinite(height)) {
    throw std::invalid_argument("interval height must be finite and nonnegative");
  }
}

Measure Measure::planar(std::vector<Segment> segments, std::string label) {
  Measure m;
  m.dim_ = 2;
  m.label_ = std::move(label);
  m.segments_ = std::move(segments);
  return m;
}

Measure Measure::linear(std::vector<Interval> intervals, std::string label) {
  std::vector<const Interval*> order;
  order.reserve(intervals.size());
  for (const auto& iv : intervals) {
    order.push_back(&iv);
  }
  std::sort(order.begin(), order.end(),
            [](const Interval* l, const Interval* r) { return l->lo() < r->lo(); });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (order[i]->lo() < order[i - 1]->hi()) {
      throw std::invalid_argument("interval components must be pairwise disjoint");
    }
  }
  Measure m;
  m.dim_ = 1;
  m.label_ = std::move(label);
  m.intervals_ = std::move(intervals);
  return m;
}

Box Measure::bounding_box() const {
  Box box;
  box.dim = dim_;
  constexpr double inf = std::numeric_limits<double>::infinity();
  box.lo = {inf, inf};
  box.hi = {-inf, -inf};
  if (dim_ == 1) {
    box.lo[1] = box.hi[1] = 0.0;
    for (const auto& iv : intervals_) {
      box.lo[0] = std::min(box.lo[0], iv.lo());
      box.hi[0] = std::max(box.hi[0], iv.hi());
    }
    return box;
  }
  for (const auto& s : segments_) {
    for (const Point& p : {s.a(), s.b()}) {
      box.lo[0] = std::min(box.lo[0], p.x());
      box.lo[1] = std::min(box.lo[1], p.y());
      box.hi[0] = std::max(box.hi[0], p.x());
      box.hi[1] = std::max(box.hi[1], p.y());
    }
  }
  return box;
}

double segment_clip_length(const Segment& s, const Ball& b) {
  if (b.dim() != 2) {
    throw DimensionMismatch("segment clipping needs a planar ball");
  }
  const Point& c = b.center();
  const Vec p0{s.a().x() - c.x(), s.a().y() - c.y()};
  const Vec d{s.b().x() - s.a().x(), s.b().y() - s.a().y()};
  const double r = b.radius();
  double fraction = 0.0;
  switch (b.norm()) {
    case Norm::L2:
      fraction = clip_disk(p0, d, r);
      break;
    case Norm::L1:
    case Norm::Linf: {
      const double scale = std::max({std::abs(s.a().x()), std::abs(s.a().y()), std::abs(c.x()),
                                     std::abs(c.y())});
      fraction = clip_polygon(p0, d, r, b.norm() == Norm::L1 ? kDiamondNormals : kSquareNormals,
                              scale);
      break;
    }
  }
  const double len = s.length();
  return std::clamp(fraction * len, 0.0, len);
}

double interval_overlap_length(const Interval& iv, const Ball& b) {
  if (b.dim() != 1) {
    throw DimensionMismatch("interval overlap needs a 1-D ball");
  }
  const double c = b.center().x();
  const double r = b.radius();
  if (iv.lo() <= c - r && c + r <= iv.hi()) {
    return 2.0 * r;  // (c + r) - (c - r) would lose the low bits of r
  }
  const double lo = std::max(iv.lo(), c - r);
  const double hi = std::min(iv.hi(), c + r);
  return hi > lo ? hi - lo : 0.0;
}

double ball_mass(const Measure& m, const Ball& b) {
  if (m.dim() != b.dim()) {
    throw DimensionMismatch("ball and measure have different dimensions");
  }
  const double r = b.radius();
  const Point& c = b.center();
  double mass = 0.0;
  if (m.dim() == 1) {
    for (const auto& iv : m.intervals()) {
      mass += iv.height() * interval_overlap_length(iv, b);
    }
    return mass;
  }
  for (const auto& s : m.segments()) {
    // Every unit ball lies inside the unit square, so a segment whose box
    // misses the ball's box contributes nothing.
    if (std::max(s.a().x(), s.b().x()) <= c.x() - r || std::min(s.a().x(), s.b().x()) >= c.x() + r ||
        std::max(s.a().y(), s.b().y()) <= c.y() - r || std::min(s.a().y(), s.b().y()) >= c.y() + r) {
      continue;
    }
    mass += s.density() * segment_clip_length(s, b);
  }
  return mass;
}

double total_mass(const Measure& m) {
  double mass = 0.0;
  for (const auto& s : m.segments()) {
    mass += s.mass();
  }
  for (const auto& iv : m.intervals()) {
    mass += iv.mass();
  }
  return mass;
}

bool support_contains(const Measure& m, const Point& x, double probe_radius, Norm norm) {
  return ball_mass(m, Ball(x, probe_radius, norm)) > 0.0;
}

}  // namespace smallball
