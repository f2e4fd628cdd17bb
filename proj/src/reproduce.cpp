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

#include "smallball/reproduce.hpp"

#include <algorithm>
#include <cmath>

namespace smallball::reproduce {

namespace g = smallball::gallery;

KDependenceReport k_dependence(double grid_spacing, int k_max, double tol) {
  g::GallerySpec spec;
  spec.id = g::GalleryId::KDependence;
  const Measure m = g::build(spec);
  const Point plus(1.0, 0.0);
  const Point minus(-1.0, 0.0);

  KDependenceReport report;
  for (const double r : {0.1, 0.25, 0.4}) {
    for (const Point& c : {minus, plus}) {
      for (const Norm norm : {Norm::L1, Norm::Linf}) {
        report.masses.push_back(
            {c, norm, r, ball_mass(m, Ball(c, r, norm)), *g::expected_mass(spec, c, r, norm)});
      }
    }
  }

  const Box box{2, {-2.5, -2.5}, {2.5, 2.5}};
  const auto grid = TranslationSet::grid(box, grid_spacing);
  const auto sched = RadiusSchedule::dyadic(0.5, k_max, 6);
  for (const Point& c : {plus, minus}) {
    for (const Norm norm : {Norm::L1, Norm::Linf}) {
      const SmallBallMap f(m, norm);
      report.strong_matrix.push_back({c == plus ? "e1" : "-e1", c, norm,
                                      check_strong_mode(f, c, grid, sched, tol)});
    }
  }

  const Neighbourhood v{Norm::L2, 0.25};
  const std::vector<std::pair<std::string, Point>> local_points{
      {"e1", plus}, {"-e1", minus}, {"mid-arm", Point(1.5, 0.0)}};
  for (const auto& [name, c] : local_points) {
    for (const Norm norm : {Norm::L1, Norm::Linf}) {
      const SmallBallMap f(m, norm);
      report.local_modes.push_back({name, c, norm, check_local_mode(f, c, v, sched, tol, grid)});
    }
  }
  return report;
}

TranslationSet crossed_squares_translates(const g::CrossedSquaresParams& p, int k) {
  const Point u = g::crossed_squares_centre(k);
  std::vector<Point> vs;
  for (int j = 0; j < p.n_crosses; ++j) {
    if (j != k) {
      vs.push_back(u - g::crossed_squares_centre(j));
    }
  }
  for (auto c : {g::CrossedSquaresCase::CrossArm, g::CrossedSquaresCase::SquareEdge,
                 g::CrossedSquaresCase::ArmEdgeJoint}) {
    vs.push_back(u - g::crossed_squares_case_point(k, c));
  }
  return TranslationSet(std::move(vs));
}

CrossedSquaresReport crossed_squares(const g::CrossedSquaresParams& p, int centres, double tol) {
  const Measure m = g::build_crossed_squares(p);
  const SmallBallMap f(m, Norm::Linf);
  const Point v0 = g::crossed_squares_centre(0);

  CrossedSquaresReport report;
  report.params = p;
  for (int n = 1; n <= std::min(6, p.n_crosses - 1); ++n) {
    const double r = std::ldexp(1.25, -(n + 1));
    const double f_vn = f(g::crossed_squares_centre(n), r);
    const double f_v0 = f(v0, r);
    const double ratio = f_vn / f_v0;
    report.bands.push_back({n, r, f_vn, f_v0, ratio, 1.25 < ratio && ratio < 1.0 + p.alpha});
  }

  const std::vector<std::pair<std::string, g::CrossedSquaresCase>> cases{
      {"cross-arm", g::CrossedSquaresCase::CrossArm},
      {"square-edge", g::CrossedSquaresCase::SquareEdge},
      {"arm-edge-joint", g::CrossedSquaresCase::ArmEdgeJoint}};
  for (const auto& [name, which] : cases) {
    const Point z = g::crossed_squares_case_point(0, which);
    for (const int e : {10, 14, 20}) {
      const double r = std::ldexp(1.0, -e);
      report.cases.push_back({name, z, r, f(z, r) / f(v0, r)});
    }
  }

  const auto weak_sched = RadiusSchedule::dyadic(0.5, 24, 6);
  for (int k = 0; k < std::min(centres, p.n_crosses); ++k) {
    const Point u = g::crossed_squares_centre(k);
    const auto translates = crossed_squares_translates(p, k);
    const int count = std::min(6, p.n_crosses - 1 - k);
    if (count < 3) {
      break;
    }
    const auto band = RadiusSchedule::band(k + 1, count, static_cast<std::size_t>(count));
    CentreVerdicts cv{k, check_weak_mode(f, u, translates, weak_sched, tol),
                      check_E_strong_mode(f, u, translates, band, tol),
                      {}};
    for (const auto& v_star : translates.explicit_points()) {
      cv.uniformity.push_back(check_uniformity(f, u, v_star, translates, 0.99, band, tol));
    }
    report.centres.push_back(std::move(cv));
  }
  return report;
}

RadiusSchedule no_mode_schedule(const g::NoModeParams& p, std::size_t tail_window) {
  std::vector<double> radii;
  for (int k = 1; k <= p.n_pieces; ++k) {
    radii.push_back(std::pow(p.b, -k));
  }
  return RadiusSchedule(std::move(radii), std::min(tail_window, radii.size()));
}

NoModeReport no_mode(const g::NoModeParams& p, int candidates, double tol) {
  const Measure m = g::build_no_mode_density(p);
  const SmallBallMap f(m, Norm::Linf);
  const double a_n = g::no_mode_normalizer(p);

  NoModeReport report;
  report.params = p;
  for (int n = 1; n <= std::min(8, p.n_pieces); ++n) {
    report.masses.push_back(
        {n, f(Point(static_cast<double>(n)), std::pow(p.b, -n)), std::pow(p.a, -n) / a_n});
  }

  const auto sched = no_mode_schedule(p);
  const auto grid = auto_search_grid(m, sched);
  for (int u = 1; u <= std::min(candidates, p.n_pieces - 1); ++u) {
    const Point x(static_cast<double>(u));
    const double r = std::pow(p.b, -(u + 1));
    const double ratio = f(Point(static_cast<double>(u + 1)), r) / f(x, r);
    report.candidates.push_back({u, r, ratio, check_strong_mode(f, x, grid, sched, tol)});
  }
  return report;
}

}  // namespace smallball::reproduce
