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

#include <string>
#include <vector>

#include "smallball/gallery.hpp"
#include "smallball/modes.hpp"

// End-to-end runs of the three counterexample constructions. Each report
// keeps the raw numbers; formatting lives in report.hpp.

namespace smallball::reproduce {

struct ClosedFormRow {
  Point centre;
  Norm norm;
  double r;
  double computed;
  double expected;
};

struct VerdictCell {
  std::string name;
  Point centre;
  Norm norm;
  Verdict verdict;
};

/// K-dependence: closed-form masses, the centre x norm strong-mode matrix,
/// and local-mode verdicts with V = B_2(0, 1/4).
struct KDependenceReport {
  std::vector<ClosedFormRow> masses;
  std::vector<VerdictCell> strong_matrix;
  std::vector<VerdictCell> local_modes;
};

KDependenceReport k_dependence(double grid_spacing = 1.0 / 64.0, int k_max = 18,
                               double tol = kDefaultTol);

struct BandRow {
  int n;
  double r;
  double f_vn;
  double f_v0;
  double ratio;
  bool inside_band;  // ratio in (5/4, 1 + alpha)
};

struct CaseRow {
  std::string name;
  Point point;
  double r;
  double ratio;  // f(point, r) / f(v0, r)
};

struct CentreVerdicts {
  int k;
  Verdict weak;
  Verdict e_strong;
  std::vector<Verdict> uniformity;  // one per sampled v_star
};

/// Crossed squares: band ratios, case-point ratios at u = v0, and weak /
/// E-strong / uniformity verdicts at v_0 .. v_{centres-1}.
struct CrossedSquaresReport {
  gallery::CrossedSquaresParams params;
  std::vector<BandRow> bands;
  std::vector<CaseRow> cases;
  std::vector<CentreVerdicts> centres;
};

/// Translate sample for u = v_k: u - t for every other centre and the three
/// case points of the k-th crossed square.
TranslationSet crossed_squares_translates(const gallery::CrossedSquaresParams& p, int k);

CrossedSquaresReport crossed_squares(const gallery::CrossedSquaresParams& p = {},
                                     int centres = 6, double tol = kDefaultTol);

struct PieceMassRow {
  int n;
  double computed;
  double expected;
};

struct CandidateRow {
  int u;
  double witness_r;
  double witness_ratio;
  Verdict strong;
};

/// No-mode density: f(n, b^-n) for n <= 8 and, for candidates u = 1..8, the
/// witness ratio f(u + 1, r) / f(u, r) at r = b^-(u+1) plus the strong verdict.
struct NoModeReport {
  gallery::NoModeParams params;
  std::vector<PieceMassRow> masses;
  std::vector<CandidateRow> candidates;
};

/// r_k = b^-k, k = 1..n_pieces: each radius matches one piece's half-width.
RadiusSchedule no_mode_schedule(const gallery::NoModeParams& p, std::size_t tail_window = 6);

NoModeReport no_mode(const gallery::NoModeParams& p = {}, int candidates = 8,
                     double tol = kDefaultTol);

}  // namespace smallball::reproduce
