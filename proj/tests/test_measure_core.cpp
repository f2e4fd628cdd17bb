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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "smallball/gallery.hpp"
#include "smallball/measure.hpp"
#include "smallball/measure_json.hpp"
#include "smallball/oracle.hpp"
#include "smallball/philox.hpp"

using namespace smallball;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const double kSqrt2 = std::sqrt(2.0);

Measure one_segment(Point a, Point b, double density = 1.0) {
  return Measure::planar({Segment(a, b, density)});
}

}  // namespace

TEST_CASE("points and norms", "[geometry]") {
  CHECK(parse_norm("l1") == Norm::L1);
  CHECK(parse_norm("2") == Norm::L2);
  CHECK(parse_norm("linf") == Norm::Linf);
  CHECK(parse_norm("inf") == Norm::Linf);
  CHECK_THROWS_AS(parse_norm("l3"), std::invalid_argument);

  const Point a(0.0, 0.0), b(3.0, -4.0);
  CHECK(distance(a, b, Norm::L1) == 7.0);
  CHECK(distance(a, b, Norm::L2) == 5.0);
  CHECK(distance(a, b, Norm::Linf) == 4.0);
  CHECK(distance(Point(1.0), Point(-2.5), Norm::L2) == 3.5);
  CHECK_THROWS_AS(a - Point(1.0), DimensionMismatch);
  CHECK_THROWS(Point(std::nan("")));
}

TEST_CASE("balls are validated and open", "[geometry]") {
  CHECK_THROWS_AS(Ball(Point(0.0, 0.0), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Ball(Point(0.0, 0.0), 1e-13), std::invalid_argument);
  CHECK_THROWS_AS(Ball(Point(0.0, 0.0), INFINITY), std::invalid_argument);
  const Ball sq(Point(0.0, 0.0), 1.0, Norm::Linf);
  CHECK(sq.contains(Point(0.999, -0.999)));
  CHECK_FALSE(sq.contains(Point(1.0, 0.0)));
  const Ball dia(Point(0.0, 0.0), 1.0, Norm::L1);
  CHECK_FALSE(dia.contains(Point(0.5, 0.5)));
  CHECK(dia.contains(Point(0.5, 0.4)));
}

TEST_CASE("segment_clip_length", "[clip]") {
  SECTION("diagonal arm through the square centre") {
    const double s = 1.0 / kSqrt2;
    const Segment arm(Point(-1.0 - s, -s), Point(-1.0 + s, s), 1.0);
    CHECK_THAT(segment_clip_length(arm, Ball(Point(-1.0, 0.0), 0.25, Norm::Linf)),
               WithinRel(2 * 0.25 * kSqrt2, 1e-12));
    CHECK_THAT(segment_clip_length(arm, Ball(Point(-1.0, 0.0), 0.25, Norm::L1)),
               WithinRel(0.25 * kSqrt2, 1e-12));
    CHECK_THAT(segment_clip_length(arm, Ball(Point(-1.0, 0.0), 0.25, Norm::L2)),
               WithinRel(0.5, 1e-12));
  }
  SECTION("tangent and boundary-collinear segments contribute nothing") {
    const Segment tangent(Point(-2.0, 1.0), Point(2.0, 1.0), 1.0);
    CHECK(segment_clip_length(tangent, Ball(Point(0.0, 0.0), 1.0, Norm::L2)) == 0.0);
    CHECK(segment_clip_length(tangent, Ball(Point(0.0, 0.0), 1.0, Norm::Linf)) == 0.0);
    const Segment edge(Point(1.0, 0.0), Point(0.0, 1.0), 1.0);
    CHECK(segment_clip_length(edge, Ball(Point(0.0, 0.0), 1.0, Norm::L1)) == 0.0);
    // Square edges of a crossed square sit on the boundary of the ball at its centre.
    const double h = 0.125;
    const Segment sq_edge(Point(-h, h), Point(h, h), 1.0);
    CHECK(segment_clip_length(sq_edge, Ball(Point(0.0, 0.0), h, Norm::Linf)) == 0.0);
    CHECK(segment_clip_length(sq_edge, Ball(Point(0.0, 0.0), 1.0000001 * h, Norm::Linf)) ==
          Catch::Approx(2 * h));
  }
  SECTION("partial overlaps") {
    const Segment s(Point(0.0, 0.0), Point(4.0, 0.0), 1.0);
    CHECK_THAT(segment_clip_length(s, Ball(Point(0.0, 0.0), 1.0, Norm::L2)), WithinAbs(1.0, 1e-15));
    CHECK_THAT(segment_clip_length(s, Ball(Point(2.0, 0.6), 1.0, Norm::L2)), WithinAbs(1.6, 1e-12));
    CHECK_THAT(segment_clip_length(s, Ball(Point(2.0, 0.5), 1.0, Norm::L1)), WithinAbs(1.0, 1e-12));
    CHECK(segment_clip_length(s, Ball(Point(2.0, 3.0), 1.0, Norm::Linf)) == 0.0);
    CHECK(segment_clip_length(s, Ball(Point(2.0, 0.0), 10.0, Norm::Linf)) == 4.0);
  }
  SECTION("degenerate segments are rejected") {
    CHECK_THROWS_AS(Segment(Point(1.0, 1.0), Point(1.0, 1.0), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Segment(Point(0.0, 0.0), Point(1.0, 0.0), -1.0), std::invalid_argument);
  }
  SECTION("random segments agree with fine quadrature") {
    UniformStream rng(2024);
    for (int i = 0; i < 10; ++i) {
      const Segment s(Point(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                      Point(rng.uniform(-1, 1), rng.uniform(-1, 1)), 1.0);
      const Norm norm = static_cast<Norm>(i % 3);
      const Ball b(Point(rng.uniform(-1, 1), rng.uniform(-1, 1)), rng.uniform(0.1, 1.0), norm);
      const Measure m = Measure::planar({s});
      CHECK_THAT(segment_clip_length(s, b),
                 WithinAbs(oracle::quadrature_ball_mass(m, b, 10'000'000), 1e-6));
    }
  }
}

TEST_CASE("interval_overlap_length", "[clip]") {
  const Interval iv(0.0, 1.0, 3.0);
  CHECK(interval_overlap_length(iv, Ball(Point(0.5), 0.1)) == Catch::Approx(0.2));
  CHECK(interval_overlap_length(iv, Ball(Point(1.5), 0.5)) == 0.0);
  CHECK(interval_overlap_length(iv, Ball(Point(1.25), 0.5)) == Catch::Approx(0.25));
  CHECK(interval_overlap_length(iv, Ball(Point(0.0), 5.0)) == 1.0);
  CHECK_THROWS(Measure::linear({Interval(0, 1, 1), Interval(0.5, 2, 1)}));
  CHECK_NOTHROW(Measure::linear({Interval(0, 1, 1), Interval(1, 2, 1)}));
}

TEST_CASE("ball_mass examples", "[mass]") {
  const Measure k = gallery::build_k_dependence();
  CHECK_THAT(ball_mass(k, Ball(Point(-1.0, 0.0), 0.25, Norm::L1)),
             WithinRel(2 * kSqrt2 * 0.25, 1e-12));
  CHECK(ball_mass(Measure::planar({}), Ball(Point(0.0, 0.0), 1.0)) == 0.0);
  CHECK(ball_mass(one_segment(Point(0.0, 0.0), Point(1.0, 0.0)),
                  Ball(Point(0.5, 0.0), 2.0, Norm::Linf)) == 1.0);
  const Measure cs = gallery::build_crossed_squares({0.875, 12});
  CHECK_THAT(ball_mass(cs, Ball(Point(1.0, 0.0), 0.3, Norm::Linf)), WithinRel(1.875, 1e-12));
  CHECK(ball_mass(k, Ball(Point(10.0, 10.0), 1.0, Norm::L2)) == 0.0);
  CHECK_THROWS_AS(ball_mass(k, Ball(Point(0.0), 1.0)), DimensionMismatch);
}

TEST_CASE("total_mass", "[mass]") {
  CHECK(total_mass(gallery::build_k_dependence()) == Catch::Approx(8.0));
  CHECK(total_mass(gallery::build_crossed_squares({0.875, 1})) == Catch::Approx(1.875 * 2));
  double expected = 0.0;
  for (int n = 0; n < 12; ++n) {
    expected += 1.875 * std::ldexp(1.0, 1 - n);
  }
  CHECK_THAT(total_mass(gallery::build_crossed_squares({0.875, 12})), WithinRel(expected, 1e-12));
  CHECK_THAT(total_mass(gallery::build_no_mode_density({2, 4, 16})), WithinRel(1.0, 1e-12));
}

TEST_CASE("support_contains", "[mass]") {
  CHECK(support_contains(gallery::build_k_dependence(), Point(1.0, 0.0), 1e-6));
  CHECK_FALSE(support_contains(gallery::build_two_line_gaussian(200), Point(0.0, 0.0), 0.5));
  CHECK_FALSE(support_contains(Measure::planar({}), Point(0.0, 0.0), 1.0));
  CHECK(support_contains(gallery::build_no_mode_density({2, 4, 4}), Point(3.0), 1e-9));
  CHECK_FALSE(support_contains(gallery::build_no_mode_density({2, 4, 4}), Point(3.5), 1e-3));
}

TEST_CASE("ball_mass invariants on random measures", "[mass][property]") {
  UniformStream rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Measure m = oracle::random_segment_measure(rng);
    const Norm norm = static_cast<Norm>(trial % 3);
    const Point c(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const double r1 = rng.uniform(0.01, 1.0);
    const double r2 = r1 + rng.uniform(0.0, 1.0);
    const double m1 = ball_mass(m, Ball(c, r1, norm));
    const double m2 = ball_mass(m, Ball(c, r2, norm));
    REQUIRE(m1 <= m2);
    REQUIRE(m1 >= 0.0);
    REQUIRE(m2 <= total_mass(m) * (1 + 1e-12));

    double sum = 0.0;
    for (const auto& s : m.segments()) {
      sum += ball_mass(Measure::planar({s}), Ball(c, r1, norm));
    }
    REQUIRE(sum == Catch::Approx(m1).epsilon(1e-13).margin(1e-15));

    const Point shift(rng.uniform(-5, 5), rng.uniform(-5, 5));
    const double scale = rng.uniform(0.1, 10.0);
    std::vector<Segment> moved;
    std::vector<Segment> scaled;
    for (const auto& s : m.segments()) {
      moved.emplace_back(s.a() + shift, s.b() + shift, s.density());
      scaled.emplace_back(scale * s.a(), scale * s.b(), s.density());
    }
    const double mt = ball_mass(Measure::planar(moved), Ball(c + shift, r1, norm));
    REQUIRE_THAT(mt, WithinRel(m1, 1e-9) || WithinAbs(m1, 1e-12));
    const double ms = ball_mass(Measure::planar(scaled), Ball(scale * c, scale * r1, norm));
    REQUIRE_THAT(ms, WithinRel(scale * m1, 1e-9) || WithinAbs(scale * m1, 1e-12));
  }
}

TEST_CASE("interval scaling and translation", "[mass][property]") {
  UniformStream rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Measure m = oracle::random_step_measure(rng);
    const Point c(rng.uniform(-2, 2));
    const double r = rng.uniform(0.01, 1.0);
    const double base = ball_mass(m, Ball(c, r));
    const double s = rng.uniform(0.5, 4.0);
    std::vector<Interval> scaled;
    for (const auto& iv : m.intervals()) {
      scaled.emplace_back(s * iv.lo(), s * iv.hi(), iv.height());
    }
    REQUIRE_THAT(ball_mass(Measure::linear(scaled), Ball(Point(s * c.x()), s * r)),
                 WithinRel(s * base, 1e-9) || WithinAbs(s * base, 1e-12));
  }
}

TEST_CASE("measure JSON round-trips bit for bit", "[json]") {
  for (const auto id : {gallery::GalleryId::CrossedSquares, gallery::GalleryId::NoMode,
                        gallery::GalleryId::KDependence, gallery::GalleryId::TwoLineGaussian}) {
    gallery::GallerySpec spec;
    spec.id = id;
    const Measure m = gallery::build(spec);
    const Measure back = parse_measure(dump_measure(m));
    REQUIRE(back.dim() == m.dim());
    REQUIRE(back.size() == m.size());
    REQUIRE(back.label() == m.label());
    for (std::size_t i = 0; i < m.segments().size(); ++i) {
      REQUIRE(back.segments()[i].a() == m.segments()[i].a());
      REQUIRE(back.segments()[i].b() == m.segments()[i].b());
      REQUIRE(back.segments()[i].density() == m.segments()[i].density());
    }
    for (std::size_t i = 0; i < m.intervals().size(); ++i) {
      REQUIRE(back.intervals()[i].lo() == m.intervals()[i].lo());
      REQUIRE(back.intervals()[i].hi() == m.intervals()[i].hi());
      REQUIRE(back.intervals()[i].height() == m.intervals()[i].height());
    }
  }
}

TEST_CASE("malformed measure JSON is rejected", "[json]") {
  CHECK_THROWS_AS(parse_measure("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_measure(R"({"dim": 3, "components": []})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_measure(R"({"dim": 2, "components": [{"type": "interval", "lo": 0, "hi": 1, "height": 1}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_measure(R"({"dim": 2, "components": [{"type": "segment", "a": [0], "b": [1, 1], "density": 1}]})"),
                  std::invalid_argument);
  const Measure ok = parse_measure(
      R"({"dim": 1, "label": "x", "components": [{"type": "interval", "lo": 0, "hi": 1, "height": 2}]})");
  CHECK(total_mass(ok) == 2.0);
}
