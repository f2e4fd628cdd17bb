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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//   acceptance            all criteria
//   acceptance --only N   criterion N alone (N = 10 reruns 1..9 twice)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "smallball/density_checks.hpp"
#include "smallball/gallery.hpp"
#include "smallball/modes.hpp"
#include "smallball/oracle.hpp"
#include "smallball/philox.hpp"
#include "smallball/report.hpp"
#include "smallball/reproduce.hpp"

using namespace smallball;
namespace g = smallball::gallery;
using report::fmt;

namespace {

const double kSqrt2 = std::sqrt(2.0);

struct Outcome {
  bool pass = true;
  std::string detail;
  std::ostringstream record;  // every number the criterion computed, for the determinism rerun

  void require(bool ok, const std::string& why) {
    if (!ok) {
      if (pass) {
        detail = why;
      } else if (detail.size() < 400) {
        detail += "; " + why;
      }
      pass = false;
    }
  }
  void note(const std::string& what, double value) { record << what << '=' << fmt(value) << '\n'; }
  void note(const std::string& what, const Verdict& v) {
    record << what << '=' << to_string(v.status) << ',' << fmt(v.limsup_est) << ','
           << fmt(v.liminf_est) << '\n';
  }
};

bool rel_close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

// ---- 1 ----
void closed_forms(Outcome& o) {
  const Measure m = g::build_k_dependence();
  const Point minus(-1.0, 0.0), plus(1.0, 0.0);
  for (const double r : {0.1, 0.25, 0.4}) {
    const struct {
      Point c;
      Norm norm;
      double expected;
      const char* name;
    } rows[] = {{minus, Norm::L1, 2 * kSqrt2 * r, "B1(-e1)"},
                {minus, Norm::Linf, 4 * kSqrt2 * r, "Binf(-e1)"},
                {plus, Norm::L1, 4 * r, "B1(e1)"},
                {plus, Norm::Linf, 4 * r, "Binf(e1)"}};
    for (const auto& row : rows) {
      const double got = ball_mass(m, Ball(row.c, r, row.norm));
      o.note(std::string(row.name) + "@" + fmt(r), got);
      o.require(rel_close(got, row.expected, 1e-9),
                std::string(row.name) + " r=" + fmt(r) + " gave " + fmt(got));
    }
  }
  if (o.pass) {
    o.detail = "12 masses within 1e-9 relative";
  }
}

// ---- 2 ----
void verdict_matrix(Outcome& o) {
  const auto rep = reproduce::k_dependence(1.0 / 64.0, 18);
  std::string summary;
  for (const auto& cell : rep.strong_matrix) {
    const bool satisfied_expected =
        (cell.name == "e1" && cell.norm == Norm::L1) || (cell.name == "-e1" && cell.norm == Norm::Linf);
    const std::string tag = cell.name + "/" + std::string(to_string(cell.norm));
    o.note(tag, cell.verdict);
    summary += tag + " " + std::string(to_string(cell.verdict.status)) + " ";
    if (satisfied_expected) {
      o.require(cell.verdict.status == Status::Satisfied, tag + " not Satisfied");
      const auto& rows = cell.verdict.evidence.front().rows;
      for (std::size_t i = rows.size() - 6; i < rows.size(); ++i) {
        o.require(std::abs(rows[i].ratio - 1.0) <= 1e-9, tag + " tail ratio " + fmt(rows[i].ratio));
      }
    } else {
      o.require(cell.verdict.status == Status::Violated, tag + " not Violated");
      o.require(std::abs(cell.verdict.limsup_est - kSqrt2) <= 1e-6,
                tag + " limsup " + fmt(cell.verdict.limsup_est));
    }
  }
  if (o.pass) {
    o.detail = summary + "(violations at limsup sqrt 2)";
  }
}

// ---- 3 ----
void band_ratios(Outcome& o) {
  const g::CrossedSquaresParams p{0.875, 12};
  const Measure m = g::build_crossed_squares(p);
  const SmallBallMap f(m, Norm::Linf);
  const Point v0 = g::crossed_squares_centre(0);
  for (int n = 1; n <= 6; ++n) {
    const double r = std::ldexp(1.25, -(n + 1));
    const double ratio = f(g::crossed_squares_centre(n), r) / f(v0, r);
    o.note("band" + std::to_string(n), ratio);
    o.require(ratio > 1.25 - 1e-9 && ratio < 1.0 + p.alpha + 1e-9,
              "band n=" + std::to_string(n) + " ratio " + fmt(ratio));
  }
  const bool bands_ok = o.pass;

  const struct {
    g::CrossedSquaresCase which;
    double stated;
    const char* name;
  } cases[] = {{g::CrossedSquaresCase::CrossArm, 0.5, "cross-arm"},
               {g::CrossedSquaresCase::SquareEdge, 7.0 / 16.0, "square-edge"},
               {g::CrossedSquaresCase::ArmEdgeJoint, 11.0 / 16.0, "arm-edge-joint"}};
  for (const auto& c : cases) {
    const Point z = g::crossed_squares_case_point(0, c.which);
    for (const int e : {10, 14, 20}) {
      const double r = std::ldexp(1.0, -e);
      const double ratio = f(z, r) / f(v0, r);
      o.note(std::string(c.name) + "@2^-" + std::to_string(e), ratio);
      if (e == 10) {
        o.require(std::abs(ratio - c.stated) <= 1e-9,
                  std::string(c.name) + " limit " + fmt(ratio) + ", expected " + fmt(c.stated));
      }
    }
  }
  if (o.pass) {
    o.detail = "6 band ratios in (5/4, 1+alpha); case limits 1/2, 7/16, 11/16";
  } else if (bands_ok) {
    o.detail = "band ratios all inside (5/4, 1+alpha), but case points: " + o.detail;
  }
}

// ---- 4 ----
void crossed_classifications(Outcome& o) {
  const g::CrossedSquaresParams p{0.875, 12};
  const SmallBallMap f(g::build_crossed_squares(p), Norm::Linf);
  const auto dyadic = RadiusSchedule::dyadic(0.5, 24);
  for (int k = 0; k <= 2; ++k) {
    const Point u = g::crossed_squares_centre(k);
    std::vector<Point> vs;
    for (int j = k + 1; j <= k + 6; ++j) {
      vs.push_back(u - g::crossed_squares_centre(j));
    }
    for (auto c : {g::CrossedSquaresCase::CrossArm, g::CrossedSquaresCase::SquareEdge,
                   g::CrossedSquaresCase::ArmEdgeJoint}) {
      vs.push_back(u - g::crossed_squares_case_point(k, c));
    }
    const TranslationSet sample(vs);
    const auto band = RadiusSchedule::band(k + 1, 6);
    const std::string tag = "v" + std::to_string(k);

    const auto weak = check_weak_mode(f, u, sample, dyadic);
    o.note(tag + " weak", weak);
    o.require(weak.status == Status::Satisfied, tag + " weak " + std::string(to_string(weak.status)));

    const auto es = check_E_strong_mode(f, u, sample, band);
    o.note(tag + " E-strong", es);
    o.require(es.status == Status::Violated && es.limsup_est >= 1.25 - 1e-9,
              tag + " E-strong " + std::string(to_string(es.status)) + " limsup " + fmt(es.limsup_est));

    for (const auto& v_star : vs) {
      const auto uni = check_uniformity(f, u, v_star, sample, 0.99, band);
      o.note(tag + " uniformity " + v_star.to_string(), uni);
      o.require(uni.status == Status::Violated, tag + " uniformity holds for v* = " + v_star.to_string());
    }
  }
  if (o.pass) {
    o.detail = "v0, v1, v2: weak Satisfied, E-strong Violated, uniformity Violated for all 9 v*";
  }
}

// ---- 5 ----
void no_mode(Outcome& o) {
  const g::NoModeParams p{2, 4, 16};
  const auto rep = reproduce::no_mode(p, 8);
  for (const auto& row : rep.masses) {
    o.note("mass" + std::to_string(row.n), row.computed);
    o.require(std::abs(row.computed - row.expected) <= 1e-12, "mass n=" + std::to_string(row.n));
  }
  double worst = INFINITY;
  for (const auto& c : rep.candidates) {
    o.note("witness" + std::to_string(c.u), c.witness_ratio);
    o.note("strong" + std::to_string(c.u), c.strong);
    worst = std::min(worst, c.witness_ratio);
    o.require(c.witness_ratio >= p.b / p.a - 1e-9, "witness u=" + std::to_string(c.u));
    o.require(c.strong.status == Status::Violated, "strong u=" + std::to_string(c.u) + " not Violated");
  }
  o.require(rep.candidates.size() == 8, "expected 8 candidates");
  if (o.pass) {
    o.detail = "masses exact to 1e-12; smallest witness ratio " + fmt(worst) +
               "; all 8 candidates strong-Violated";
  }
}

// ---- 6 ----
std::vector<Point> random_support_points(const Measure& m, UniformStream& rng, int count) {
  std::vector<Point> out;
  for (int i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(rng.next() * static_cast<double>(m.size()));
    const double t = rng.uniform(0.05, 0.95);
    if (m.dim() == 2) {
      const Segment& s = m.segments()[k];
      out.push_back(s.a() + t * (s.b() - s.a()));
    } else {
      const Interval& iv = m.intervals()[k];
      out.emplace_back(iv.lo() + t * (iv.hi() - iv.lo()));
    }
  }
  return out;
}

void implication_chain(Outcome& o) {
  UniformStream rng(606);
  const auto sched = RadiusSchedule::dyadic(0.25, 14);
  int checked = 0;
  int strong_sat = 0;
  int estrong_sat = 0;
  int weak_sat = 0;
  for (const auto id : {g::GalleryId::CrossedSquares, g::GalleryId::NoMode,
                        g::GalleryId::KDependence, g::GalleryId::TwoLineGaussian}) {
    g::GallerySpec spec;
    spec.id = id;
    const Measure m = g::build(spec);
    // Candidates and explicit grid points: the marked points, then 20 random support points.
    const auto candidates = random_support_points(m, rng, 20);
    std::vector<Point> explicit_pts = g::points_of_interest(spec);
    explicit_pts.insert(explicit_pts.end(), candidates.begin(), candidates.end());
    const auto cover = auto_search_grid(m, sched, m.dim() == 2 ? 96 : 4096);
    const TranslationSet grid(explicit_pts, cover.grid_spec(), true);

    for (const Norm norm : {Norm::L1, Norm::Linf}) {
      const SmallBallMap f(m, norm);
      for (std::size_t i = 0; i < explicit_pts.size(); ++i) {
        const Point& u = explicit_pts[i];
        // E = {0} and u - z for the next four explicit grid points, so u - E
        // lies in the grid.
        std::vector<Point> vs{u - u};
        for (std::size_t j = 1; j <= 4; ++j) {
          vs.push_back(u - explicit_pts[(i + j) % explicit_pts.size()]);
        }
        const TranslationSet e(std::move(vs));
        const auto strong = check_strong_mode(f, u, grid, sched);
        const auto es = check_E_strong_mode(f, u, e, sched);
        const auto weak = check_weak_mode(f, u, e, sched);
        o.note("chain", strong);
        o.note("chain", es);
        o.note("chain", weak);
        ++checked;
        strong_sat += strong.status == Status::Satisfied ? 1 : 0;
        estrong_sat += es.status == Status::Satisfied ? 1 : 0;
        weak_sat += weak.status == Status::Satisfied ? 1 : 0;
        const std::string where = std::string(g::to_string(id)) + " u=" + u.to_string();
        if (strong.status == Status::Satisfied) {
          o.require(es.status == Status::Satisfied, "strong but not E-strong at " + where);
        }
        if (es.status == Status::Satisfied) {
          o.require(weak.status == Status::Satisfied, "E-strong but not E-weak at " + where);
        }
      }
      if (m.dim() == 1) {
        break;
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(checked) + " candidate/norm pairs, " + std::to_string(strong_sat) +
                " strong-Satisfied, " + std::to_string(estrong_sat) + " E-strong-Satisfied, " +
               std::to_string(weak_sat) + " E-weak-Satisfied, no breaks";
  }
}

// ---- 7 ----
void oracle_agreement(Outcome& o) {
  const auto cases = oracle::random_oracle_cases(7007, 100);
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  int mc_ok = 0;
  int quad_ok = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    const double exact = ball_mass(c.measure, c.ball);
    const double slack = 1e-12 * total_mass(c.measure);
    const auto mc = oracle::mc_ball_mass(c.measure, c.ball, {100'000, 1000 + i}, workers);
    const double quad = oracle::quadrature_ball_mass(c.measure, c.ball, 100'000);
    o.note(c.id + " exact", exact);
    o.note(c.id + " mc", mc.estimate);
    o.note(c.id + " quad", quad);
    mc_ok += std::abs(mc.estimate - exact) <= 5 * mc.std_error + slack ? 1 : 0;
    quad_ok += std::abs(quad - exact) <= oracle::quadrature_error_bound(c.measure, 100'000) + slack
                   ? 1
                   : 0;
  }
  o.require(mc_ok >= 95, "Monte Carlo agreed in only " + std::to_string(mc_ok) + "/100");
  o.require(quad_ok == 100, "quadrature agreed in only " + std::to_string(quad_ok) + "/100");
  if (o.pass) {
    o.detail = "Monte Carlo within 5 se in " + std::to_string(mc_ok) +
               "/100, quadrature within bound in 100/100";
  }
}

// ---- 8 ----
void lsc(Outcome& o) {
  UniformStream rng(808);
  int passed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Measure m = oracle::random_segment_measure(rng);
    const SmallBallMap f(m, static_cast<Norm>(trial % 3));
    const Point x(rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2));
    const double r = rng.uniform(0.05, 1.0);
    const double angle = rng.uniform(0.0, 2.0 * M_PI);
    const Point dir(std::cos(angle), std::sin(angle));
    std::vector<Point> approach;
    for (int n = 1; n <= 40; ++n) {
      approach.push_back(x + std::ldexp(1.0, -n) * dir);
    }
    const bool ok = lsc_probe(f, x, r, approach, 1e-9);
    o.note("lsc", ok ? 1.0 : 0.0);
    passed += ok ? 1 : 0;
  }
  o.require(passed == 100, "lsc_probe failed " + std::to_string(100 - passed) + " trials");
  if (o.pass) {
    o.detail = "100/100 trials";
  }
}

// ---- 9 ----
void density_checks(Outcome& o) {
  UniformStream rng(909);
  const auto sched = RadiusSchedule::dyadic(1e-3, 20);
  int lebesgue = 0;
  int rn = 0;
  int bound = 0;
  for (int trial = 0; trial < 20; ++trial) {
    // Pieces of width >= 0.1 separated by gaps, heights distinct.
    std::vector<Interval> pieces;
    double x = rng.uniform(-2.0, -1.0);
    const int count = 2 + static_cast<int>(rng.next() * 4);
    for (int i = 0; i < count; ++i) {
      const double w = rng.uniform(0.1, 0.6);
      pieces.emplace_back(x, x + w, rng.uniform(0.2, 4.0));
      x += w + rng.uniform(0.0, 0.3);
    }
    const Measure m = Measure::linear(pieces);
    const SmallBallMap f(m, Norm::Linf);

    bool leb_ok = true;
    for (const auto& iv : pieces) {
      leb_ok = leb_ok && lebesgue_ratio_check(f, Point(0.5 * (iv.lo() + iv.hi())), sched,
                                              iv.height(), 1e-12);
    }
    lebesgue += leb_ok ? 1 : 0;

    const auto& a = pieces.front();
    const auto& b = pieces.back();
    const Point u(a.lo() + rng.uniform(0.2, 0.8) * a.length());
    const double target = b.lo() + rng.uniform(0.2, 0.8) * b.length();
    const double shift = u.x() - target;
    const bool rn_ok = rn_limit_check(f, u, shift, sched, 1e-9);
    o.note("rn", f(Point(target), sched.min_radius()) / f(u, sched.min_radius()));
    rn += rn_ok ? 1 : 0;

    // The midpoint of the tallest piece is a weak mode over the piece midpoints.
    std::size_t top = 0;
    for (std::size_t i = 1; i < pieces.size(); ++i) {
      if (pieces[i].height() > pieces[top].height()) {
        top = i;
      }
    }
    const Point mode(0.5 * (pieces[top].lo() + pieces[top].hi()));
    std::vector<double> shifts;
    std::vector<Point> vs;
    for (const auto& iv : pieces) {
      shifts.push_back(mode.x() - 0.5 * (iv.lo() + iv.hi()));
      vs.emplace_back(shifts.back());
    }
    const auto weak = check_weak_mode(f, mode, TranslationSet(vs), sched);
    const double max_rn = max_rn_value(m, mode, shifts);
    o.note("max_rn", max_rn);
    bound += weak.status == Status::Satisfied && max_rn <= 1.0 + 1e-9 &&
                     rn_bound_at_weak_mode(f, mode, shifts, sched, 1e-9)
                 ? 1
                 : 0;
  }
  o.require(lebesgue == 20, "Lebesgue ratio check failed on " + std::to_string(20 - lebesgue));
  o.require(rn == 20, "RN limit check failed on " + std::to_string(20 - rn));
  o.require(bound == 20, "RN bound at weak mode failed on " + std::to_string(20 - bound));
  if (o.pass) {
    o.detail = "Lebesgue 20/20, RN limits 20/20, RN bound at weak modes 20/20";
  }
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;  // <= 0: no runtime bound
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "K-dependence closed-form masses", 1.0, closed_forms},
      {2, "K-dependence strong-mode matrix", 30.0, verdict_matrix},
      {3, "crossed squares band and case ratios", 0.0, band_ratios},
      {4, "crossed squares weak / E-strong / uniformity", 10.0, crossed_classifications},
      {5, "no-mode density", 5.0, no_mode},
      {6, "strong => E-strong => E-weak", 0.0, implication_chain},
      {7, "oracle cross-validation", 60.0, oracle_agreement},
      {8, "lower semicontinuity probe", 0.0, lsc},
      {9, "Lebesgue and Radon-Nikodym checks", 0.0, density_checks},
  };
  return all;
}

struct Run {
  bool pass;
  std::string detail;
  std::string record;
  double seconds;
};

Run run_one(const Criterion& c) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.run(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.budget_s > 0 && s > c.budget_s) {
    o.require(false, "took " + fmt(s) + " s, budget " + fmt(c.budget_s) + " s");
  }
  return {o.pass, o.detail, o.record.str(), s};
}

void print(int id, const char* title, bool pass, const std::string& detail, double seconds) {
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", seconds);
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << title << "  ["
            << timing << "]  " << detail << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--only", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  std::vector<Run> first;
  for (const auto& c : criteria()) {
    if (only == 0 || only == c.id || only == 10) {
      const Run r = run_one(c);
      if (only != 10) {
        print(c.id, c.title, r.pass, r.detail, r.seconds);
        all_pass = all_pass && r.pass;
      }
      first.push_back(r);
    }
  }

  if (only == 0 || only == 10) {
    const auto t0 = std::chrono::steady_clock::now();
    int identical = 0;
    std::string diff;
    for (std::size_t i = 0; i < criteria().size(); ++i) {
      const Run again = run_one(criteria()[i]);
      if (again.record == first[i].record && !again.record.empty()) {
        ++identical;
      } else {
        diff += " " + std::to_string(criteria()[i].id);
      }
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = identical == static_cast<int>(criteria().size());
    print(10, "determinism across two runs", pass,
          pass ? "criteria 1-9 reproduced bit for bit" : "outputs differ for criteria" + diff, s);
    all_pass = all_pass && pass;
  }
  return all_pass ? EXIT_SUCCESS : EXIT_FAILURE;
}
