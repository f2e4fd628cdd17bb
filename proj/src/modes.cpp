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

#include "smallball/modes.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numeric>

namespace smallball {

namespace {

constexpr std::size_t kMaxGridPoints = 50'000'000;

void require_support(const SmallBallMap& f, const Point& u, const RadiusSchedule& sched) {
  if (u.dim() != f.dim()) {
    throw DimensionMismatch("candidate point and measure have different dimensions");
  }
  // The smallest radius is the support probe; the rest keep every row defined.
  for (auto it = sched.radii().rbegin(); it != sched.radii().rend(); ++it) {
    if (!(f(u, *it) > 0.0)) {
      throw NotInSupport("f(u, r) = 0 at r = " + std::to_string(*it) + " for u = " +
                         u.to_string() + "; u is not in the support");
    }
  }
}

std::vector<Point> translates_of(const Point& u, const TranslationSet& translates) {
  auto vs = translates.materialize(u.dim());
  if (vs.empty()) {
    throw EmptySet("translate set is empty");
  }
  std::vector<Point> zs;
  zs.reserve(vs.size());
  for (const auto& v : vs) {
    zs.push_back(u - v);
  }
  return zs;
}

// Centres at which z -> f(z, r) can have a local maximum for a 1-D step
// density: z +- r meets an interval endpoint.
std::vector<Point> breakpoint_centres(const Measure& m, double r) {
  std::vector<Point> out;
  out.reserve(4 * m.intervals().size());
  for (const auto& iv : m.intervals()) {
    for (double e : {iv.lo(), iv.hi()}) {
      out.emplace_back(e - r);
      out.emplace_back(e + r);
    }
  }
  return out;
}

std::span<const RatioRow> tail_rows(const RatioTrace& t, std::size_t window) {
  return std::span<const RatioRow>(t.rows).last(window);
}

// Status for "limit <= 1" conditions.
Status upper_status(const LimitEstimate& est, std::span<const RatioRow> tail, double tol) {
  if (est.limsup <= 1.0 + tol) {
    return Status::Satisfied;
  }
  if (est.liminf > 1.0 + tol) {
    return Status::Violated;
  }
  // A subsequence above 1 + tol on at least half of the tail counts as persistent.
  const auto above = std::count_if(tail.begin(), tail.end(),
                                   [tol](const RatioRow& row) { return row.ratio > 1.0 + tol; });
  if (2 * static_cast<std::size_t>(above) >= tail.size()) {
    return Status::Violated;
  }
  return Status::Inconclusive;
}

// Status for "limit == 1" conditions.
Status unit_status(const LimitEstimate& est, std::span<const RatioRow> tail, double tol) {
  if (est.limsup <= 1.0 + tol && est.liminf >= 1.0 - tol) {
    return Status::Satisfied;
  }
  if (est.limsup < 1.0 - tol) {
    return Status::Violated;
  }
  const Status upper = upper_status(est, tail, tol);
  return upper == Status::Violated ? Status::Violated : Status::Inconclusive;
}

RatioTrace sup_trace(const SmallBallMap& f, const Point& u, const RadiusSchedule& sched,
                     std::span<const Point> candidates, bool include_u, bool exact_1d,
                     const std::optional<Neighbourhood>& local) {
  RatioTrace trace{u, std::nullopt, {}};
  trace.rows.reserve(sched.size());
  for (const double r : sched.radii()) {
    const double den = f(u, r);
    if (!(den > 0.0)) {
      throw NotInSupport("f(u, r) = 0 at r = " + std::to_string(r));
    }
    double num = candidates.empty() ? 0.0 : sup_over(f, candidates, r).value;
    if (include_u) {
      num = std::max(num, den);
    }
    if (exact_1d && f.dim() == 1) {
      auto extra = breakpoint_centres(f.measure(), r);
      if (local) {
        std::erase_if(extra, [&](const Point& z) {
          return !(distance(z, u, local->norm) < local->radius);
        });
        // The open interval's supremum is attained on its closure.
        extra.emplace_back(u.x() - local->radius);
        extra.emplace_back(u.x() + local->radius);
      }
      if (!extra.empty()) {
        num = std::max(num, sup_over(f, extra, r).value);
      }
    }
    trace.rows.push_back({r, num, den, num / den});
  }
  return trace;
}

Verdict verdict_from(RatioTrace trace, const RadiusSchedule& sched, double tol, bool unit_limit) {
  const auto est = estimate_limit(trace, sched.tail_window(), tol);
  const auto tail = tail_rows(trace, sched.tail_window());
  Verdict v;
  v.status = unit_limit ? unit_status(est, tail, tol) : upper_status(est, tail, tol);
  v.limsup_est = est.limsup;
  v.liminf_est = est.liminf;
  v.tol = tol;
  v.evidence.push_back(std::move(trace));
  return v;
}

void require_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw std::invalid_argument("tolerance must be positive");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Schedules and translate sets

RadiusSchedule::RadiusSchedule(std::vector<double> radii, std::size_t tail_window)
    : radii_(std::move(radii)), tail_window_(tail_window) {
  if (radii_.empty()) {
    throw std::invalid_argument("radius schedule is empty");
  }
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (!std::isfinite(radii_[i]) || radii_[i] < kMinRadius) {
      throw std::invalid_argument("scheduled radii must be finite and >= 1e-12");
    }
    if (i > 0 && !(radii_[i] < radii_[i - 1])) {
      throw std::invalid_argument("radius schedule must be strictly decreasing");
    }
  }
  if (tail_window_ < 3 || tail_window_ > radii_.size()) {
    throw std::invalid_argument("tail window must satisfy 3 <= m <= schedule length");
  }
}

RadiusSchedule RadiusSchedule::dyadic(double r0, int k_max, std::size_t tail_window) {
  if (k_max < 0) {
    throw std::invalid_argument("dyadic schedule needs k_max >= 0");
  }
  std::vector<double> radii;
  for (int k = 0; k <= k_max; ++k) {
    radii.push_back(std::ldexp(r0, -k));
  }
  return RadiusSchedule(std::move(radii), tail_window);
}

RadiusSchedule RadiusSchedule::band(int first, int count, std::size_t tail_window) {
  if (first < 0 || count < 1) {
    throw std::invalid_argument("band schedule needs first >= 0 and count >= 1");
  }
  std::vector<double> radii;
  for (int n = first; n < first + count; ++n) {
    radii.push_back(std::ldexp(1.25, -(n + 1)));
  }
  return RadiusSchedule(std::move(radii), tail_window);
}

RadiusSchedule RadiusSchedule::geometric(double r0, double factor, int count,
                                         std::size_t tail_window) {
  if (!(factor > 0.0 && factor < 1.0) || count < 1) {
    throw std::invalid_argument("geometric schedule needs factor in (0, 1) and count >= 1");
  }
  std::vector<double> radii;
  double r = r0;
  for (int k = 0; k < count; ++k) {
    radii.push_back(r);
    r *= factor;
  }
  return RadiusSchedule(std::move(radii), tail_window);
}

TranslationSet::TranslationSet(std::vector<Point> points, std::optional<GridSpec> grid,
                               bool dense_intent)
    : points_(std::move(points)), grid_(std::move(grid)), dense_intent_(dense_intent) {
  if (grid_) {
    if (!(grid_->spacing > 0.0) || !std::isfinite(grid_->spacing)) {
      throw std::invalid_argument("grid spacing must be positive");
    }
    if (grid_->box.empty()) {
      throw std::invalid_argument("grid box is empty");
    }
  }
}

TranslationSet TranslationSet::grid(const Box& box, double spacing, bool dense_intent) {
  return TranslationSet({}, GridSpec{box, spacing}, dense_intent);
}

std::vector<Point> TranslationSet::materialize(int dim) const {
  std::vector<Point> out;
  for (const auto& p : points_) {
    if (p.dim() != dim) {
      throw DimensionMismatch("translate has the wrong dimension");
    }
    out.push_back(p);
  }
  if (!grid_) {
    return out;
  }
  const auto& box = grid_->box;
  if (box.dim != dim) {
    throw DimensionMismatch("grid box has the wrong dimension");
  }
  const double h = grid_->spacing;
  // The 1e-9 slack keeps hi on the grid when (hi - lo) / h is an integer up to rounding.
  const auto count = [h](double lo, double hi) {
    return static_cast<std::size_t>(std::floor((hi - lo) / h + 1e-9)) + 1;
  };
  const std::size_t nx = count(box.lo[0], box.hi[0]);
  const std::size_t ny = dim == 2 ? count(box.lo[1], box.hi[1]) : 1;
  if (nx * ny > kMaxGridPoints) {
    throw std::invalid_argument("grid would hold more than 5e7 points; increase the spacing");
  }
  out.reserve(out.size() + nx * ny);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const double x = box.lo[0] + static_cast<double>(i) * h;
      if (dim == 1) {
        out.emplace_back(x);
      } else {
        out.emplace_back(x, box.lo[1] + static_cast<double>(j) * h);
      }
    }
  }
  return out;
}

TranslationSet auto_search_grid(const Measure& m, const RadiusSchedule& sched,
                                std::size_t max_per_axis) {
  if (m.empty()) {
    throw EmptySet("cannot build a search grid for the empty measure");
  }
  const Box box = m.bounding_box().inflated(sched.max_radius());
  double extent = box.hi[0] - box.lo[0];
  if (m.dim() == 2) {
    extent = std::max(extent, box.hi[1] - box.lo[1]);
  }
  const double spacing =
      std::max(sched.min_radius() / 4.0, extent / static_cast<double>(max_per_axis - 1));
  return TranslationSet::grid(box, spacing, true);
}

// ---------------------------------------------------------------------------
// Evaluation map and traces

SmallBallMap::SmallBallMap(Measure measure, Norm norm) : measure_(std::move(measure)), norm_(norm) {}

double SmallBallMap::operator()(const Point& x, double r) const {
  return ball_mass(measure_, Ball(x, r, norm_));
}

SupResult sup_over(const SmallBallMap& f, std::span<const Point> points, double r) {
  if (points.empty()) {
    throw EmptySet("supremum over an empty point set");
  }
  SupResult best{-1.0, 0};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double v = f(points[i], r);
    if (v > best.value) {
      best = {v, i};
    }
  }
  return best;
}

std::string RatioTrace::to_csv() const {
  std::string out = "r,f_num,f_den,ratio\n";
  char buf[160];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", row.r, row.numerator,
                  row.denominator, row.ratio);
    out += buf;
  }
  return out;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Satisfied: return "Satisfied";
    case Status::Violated: return "Violated";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

RatioTrace ratio_trace(const SmallBallMap& f, const Point& u, const Point& z,
                       const RadiusSchedule& sched) {
  if (u.dim() != f.dim() || z.dim() != f.dim()) {
    throw DimensionMismatch("trace points and measure have different dimensions");
  }
  RatioTrace trace{u, z, {}};
  trace.rows.reserve(sched.size());
  for (const double r : sched.radii()) {
    const double den = f(u, r);
    if (!(den > 0.0)) {
      throw NotInSupport("f(u, r) = 0 at r = " + std::to_string(r) + " for u = " +
                         u.to_string());
    }
    const double num = z == u ? den : f(z, r);
    trace.rows.push_back({r, num, den, num / den});
  }
  return trace;
}

LimitEstimate estimate_limit(const RatioTrace& trace, std::size_t tail_window, double tol) {
  if (tail_window == 0 || trace.rows.size() < tail_window) {
    throw std::invalid_argument("trace is shorter than the tail window");
  }
  const auto tail = tail_rows(trace, tail_window);
  LimitEstimate est{0.0, -std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity(), false};
  for (const auto& row : tail) {
    est.limit += row.ratio;
    est.limsup = std::max(est.limsup, row.ratio);
    est.liminf = std::min(est.liminf, row.ratio);
  }
  est.limit /= static_cast<double>(tail.size());
  est.inconclusive =
      (est.limsup - est.liminf) > tol && !(est.limsup <= 1.0 + tol) && !(est.liminf > 1.0 + tol);
  return est;
}

// ---------------------------------------------------------------------------
// Mode checks

Verdict check_weak_mode(const SmallBallMap& f, const Point& u, const TranslationSet& translates,
                        const RadiusSchedule& sched, double tol) {
  require_tol(tol);
  require_support(f, u, sched);
  const auto vs = translates.materialize(u.dim());
  if (vs.empty()) {
    throw EmptySet("translate set is empty");
  }
  Verdict worst;
  bool have_worst = false;
  bool any_violated = false;
  bool all_satisfied = true;
  for (const auto& v : vs) {
    Verdict one = verdict_from(ratio_trace(f, u, u - v, sched), sched, tol, false);
    one.worst_translate = v;
    const bool violated = one.status == Status::Violated;
    all_satisfied = all_satisfied && one.status == Status::Satisfied;
    // Prefer a violating translate as evidence; among equals keep the larger limsup.
    const bool better = !have_worst || (violated && !any_violated) ||
                        (violated == any_violated && one.limsup_est > worst.limsup_est);
    any_violated = any_violated || violated;
    if (better) {
      worst = std::move(one);
      have_worst = true;
    }
  }
  worst.status = all_satisfied ? Status::Satisfied
                               : (any_violated ? Status::Violated : Status::Inconclusive);
  return worst;
}

Verdict check_strong_mode(const SmallBallMap& f, const Point& u, const TranslationSet& search_grid,
                          const RadiusSchedule& sched, double tol) {
  require_tol(tol);
  require_support(f, u, sched);
  if (const auto& g = search_grid.grid_spec()) {
    const Box needed = f.measure().bounding_box().inflated(sched.max_radius());
    if (!g->box.covers(needed)) {
      throw std::invalid_argument(
          "search grid does not cover the support box inflated by the largest radius");
    }
  }
  const auto points = search_grid.materialize(u.dim());
  if (points.empty()) {
    throw EmptySet("search grid is empty");
  }
  return verdict_from(sup_trace(f, u, sched, points, true, true, std::nullopt), sched, tol, true);
}

Verdict check_E_strong_mode(const SmallBallMap& f, const Point& u,
                            const TranslationSet& translates, const RadiusSchedule& sched,
                            double tol) {
  require_tol(tol);
  require_support(f, u, sched);
  const auto zs = translates_of(u, translates);
  auto trace = sup_trace(f, u, sched, zs, false, false, std::nullopt);
  Verdict v = verdict_from(std::move(trace), sched, tol, false);
  // Report the translate attaining the sup at the last tail radius that
  // exceeds 1 + tol, or at the smallest radius otherwise.
  const auto vs = translates.materialize(u.dim());
  double witness_r = sched.min_radius();
  for (const auto& row : v.evidence.front().rows) {
    if (row.ratio > 1.0 + tol) {
      witness_r = row.r;
    }
  }
  v.worst_translate = vs[sup_over(f, zs, witness_r).index];
  return v;
}

Verdict check_local_mode(const SmallBallMap& f, const Point& u, const Neighbourhood& neighbourhood,
                         const RadiusSchedule& sched, double tol,
                         const TranslationSet& search_grid) {
  require_tol(tol);
  if (!(neighbourhood.radius > 0.0)) {
    throw std::invalid_argument("neighbourhood radius must be positive");
  }
  require_support(f, u, sched);
  auto points = search_grid.materialize(u.dim());
  std::erase_if(points, [&](const Point& z) {
    return !(distance(z, u, neighbourhood.norm) < neighbourhood.radius);
  });
  return verdict_from(sup_trace(f, u, sched, points, true, true, neighbourhood), sched, tol, true);
}

Verdict check_uniformity(const SmallBallMap& f, const Point& u, const Point& v_star,
                         const TranslationSet& translates, double r_star,
                         const RadiusSchedule& sched, double tol) {
  require_tol(tol);
  if (!(r_star > 0.0 && r_star < 1.0)) {
    throw std::invalid_argument("r_star must lie in (0, 1)");
  }
  require_support(f, u, sched);
  const auto vs = translates.materialize(u.dim());
  if (vs.empty()) {
    throw EmptySet("translate set is empty");
  }
  if (std::find(vs.begin(), vs.end(), v_star) == vs.end()) {
    throw std::invalid_argument("v_star must belong to the translate sample");
  }
  std::vector<Point> zs;
  for (const auto& v : vs) {
    zs.push_back(u - v);
  }
  const Point z_star = u - v_star;

  RatioTrace star{u, z_star, {}};
  RatioTrace sup{u, std::nullopt, {}};
  Verdict verdict;
  verdict.tol = tol;
  verdict.worst_translate = v_star;
  verdict.limsup_est = -std::numeric_limits<double>::infinity();
  verdict.liminf_est = std::numeric_limits<double>::infinity();
  for (const double r : sched.radii()) {
    if (!(r < r_star)) {
      continue;
    }
    const double den = f(u, r);
    const double at_star = f(z_star, r);
    const auto best = sup_over(f, zs, r);
    star.rows.push_back({r, at_star, den, at_star / den});
    sup.rows.push_back({r, best.value, den, best.value / den});
    const double deficit = (best.value - at_star) / den;
    if (deficit > verdict.limsup_est) {
      verdict.limsup_est = deficit;
      if (deficit > tol) {
        verdict.worst_translate = vs[best.index];
      }
    }
    verdict.liminf_est = std::min(verdict.liminf_est, deficit);
  }
  if (star.rows.empty()) {
    throw std::invalid_argument("no scheduled radius lies below r_star");
  }
  verdict.status = verdict.limsup_est <= tol ? Status::Satisfied : Status::Violated;
  verdict.evidence.push_back(std::move(star));
  verdict.evidence.push_back(std::move(sup));
  return verdict;
}

Verdict check_clr(const SmallBallMap& f, const Point& u, const TranslationSet& translates,
                  const TranslationSet& search_grid, const RadiusSchedule& sched, double tol) {
  require_tol(tol);
  require_support(f, u, sched);
  const auto zs = translates_of(u, translates);
  const auto grid = search_grid.materialize(u.dim());
  if (grid.empty()) {
    throw EmptySet("search grid is empty");
  }
  auto over_e = sup_trace(f, u, sched, zs, false, false, std::nullopt);
  auto over_x = sup_trace(f, u, sched, grid, true, true, std::nullopt);
  const auto est = estimate_limit(over_x, sched.tail_window(), tol);
  const auto tail_e = tail_rows(over_e, sched.tail_window());
  const auto tail_x = tail_rows(over_x, sched.tail_window());
  double gap = 0.0;
  for (std::size_t i = 0; i < tail_x.size(); ++i) {
    gap = std::max(gap, std::abs(tail_x[i].ratio - tail_e[i].ratio));
  }
  Verdict v;
  v.status = gap <= tol ? Status::Satisfied : Status::Violated;
  v.limsup_est = est.limsup;
  v.liminf_est = est.liminf;
  v.tol = tol;
  v.evidence.push_back(std::move(over_e));
  v.evidence.push_back(std::move(over_x));
  return v;
}

bool lsc_probe(const SmallBallMap& f, const Point& x, double r, std::span<const Point> approach,
               double tol) {
  if (approach.empty()) {
    throw EmptySet("approach sequence is empty");
  }
  const double at_x = f(x, r);
  const auto tail = approach.last(std::min<std::size_t>(5, approach.size()));
  return std::all_of(tail.begin(), tail.end(),
                     [&](const Point& p) { return f(p, r) >= at_x - tol; });
}

}  // namespace smallball
