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

#include "smallball/geometry.hpp"

#include <algorithm>
#include <cstdio>

namespace smallball {

namespace {

void require_finite(double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("point coordinates must be finite");
  }
}

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("points of different dimension");
  }
}

}  // namespace

Point::Point(double x) : c_{x, 0.0}, dim_(1) { require_finite(x); }

Point::Point(double x, double y) : c_{x, y}, dim_(2) {
  require_finite(x);
  require_finite(y);
}

Point Point::from(std::span<const double> coords) {
  if (coords.size() == 1) {
    return Point(coords[0]);
  }
  if (coords.size() == 2) {
    return Point(coords[0], coords[1]);
  }
  throw std::invalid_argument("a point needs 1 or 2 coordinates");
}

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b);
  return a.dim() == 1 ? Point(a.x() + b.x()) : Point(a.x() + b.x(), a.y() + b.y());
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b);
  return a.dim() == 1 ? Point(a.x() - b.x()) : Point(a.x() - b.x(), a.y() - b.y());
}

Point operator*(double s, const Point& a) {
  return a.dim() == 1 ? Point(s * a.x()) : Point(s * a.x(), s * a.y());
}

std::string Point::to_string() const {
  char buf[96];
  if (dim_ == 1) {
    std::snprintf(buf, sizeof buf, "%.17g", c_[0]);
  } else {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", c_[0], c_[1]);
  }
  return buf;
}

Norm parse_norm(std::string_view text) {
  if (text == "l1" || text == "1" || text == "L1") return Norm::L1;
  if (text == "l2" || text == "2" || text == "L2") return Norm::L2;
  if (text == "linf" || text == "inf" || text == "Linf" || text == "l_inf") return Norm::Linf;
  throw std::invalid_argument("unknown norm '" + std::string(text) + "' (expected l1, l2 or linf)");
}

std::string_view to_string(Norm norm) {
  switch (norm) {
    case Norm::L1: return "l1";
    case Norm::L2: return "l2";
    case Norm::Linf: return "linf";
  }
  return "?";
}

double distance(const Point& a, const Point& b, Norm norm) {
  require_same_dim(a, b);
  const double dx = std::abs(a.x() - b.x());
  if (a.dim() == 1) {
    return dx;
  }
  const double dy = std::abs(a.y() - b.y());
  switch (norm) {
    case Norm::L1: return dx + dy;
    case Norm::L2: return std::hypot(dx, dy);
    case Norm::Linf: return std::max(dx, dy);
  }
  return 0.0;
}

Ball::Ball(Point center, double radius, Norm norm)
    : center_(center), radius_(radius), norm_(norm) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("ball radius must be positive and finite");
  }
  if (radius < kMinRadius) {
    throw std::invalid_argument("ball radius below the 1e-12 underflow guard");
  }
}

bool Ball::contains(const Point& p) const {
  return distance(p, center_, norm_) < radius_;
}

Box Box::inflated(double by) const {
  Box out = *this;
  for (int i = 0; i < dim; ++i) {
    out.lo[static_cast<std::size_t>(i)] -= by;
    out.hi[static_cast<std::size_t>(i)] += by;
  }
  return out;
}

bool Box::covers(const Box& other) const {
  for (std::size_t i = 0; i < static_cast<std::size_t>(dim); ++i) {
    if (lo[i] > other.lo[i] || hi[i] < other.hi[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace smallball
