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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "smallball/gallery.hpp"
#include "smallball/measure_json.hpp"
#include "smallball/modes.hpp"
#include "smallball/oracle.hpp"
#include "smallball/report.hpp"
#include "smallball/reproduce.hpp"

namespace smallball::cli {

namespace {

namespace fs = std::filesystem;
namespace g = smallball::gallery;
using report::fmt;
using report::write_file_atomic;

std::vector<double> parse_numbers(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("not a number list: '" + std::string(text) + "'");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

Point parse_point(std::string_view text) { return Point::from(parse_numbers(text)); }

// "x,y;x,y;..." or "x;x;..." for 1-D.
std::vector<Point> parse_points(std::string_view text) {
  std::vector<Point> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    if (end > pos) {
      out.push_back(parse_point(text.substr(pos, end - pos)));
    }
    pos = end + 1;
  }
  return out;
}

struct MeasureSource {
  std::string path;
  std::string gallery;
  double alpha = g::CrossedSquaresParams{}.alpha;
  std::optional<int> n;
  double a = g::NoModeParams{}.a;
  double b = g::NoModeParams{}.b;
  int segments = 400;

  void add_to(CLI::App* app, const std::vector<std::string>& ids) {
    auto* m = app->add_option("--measure", path, "Measure JSON file");
    auto* gopt = app->add_option("--gallery", gallery, "Gallery measure id")
                     ->check(CLI::IsMember(ids));
    m->excludes(gopt);
    add_params(app);
  }

  void add_params(CLI::App* app) {
    app->add_option("--alpha", alpha, "crossed-squares square weight, in (0, 1)");
    app->add_option("--n", n, "crossed-squares count or no-mode piece count");
    app->add_option("--a", a, "no-mode mass decay base");
    app->add_option("--b", b, "no-mode width decay base");
    app->add_option("--segments", segments, "two-line-gaussian cells per line");
  }

  g::GallerySpec spec(g::GalleryId id) const {
    g::GallerySpec s;
    s.id = id;
    s.crossed.alpha = alpha;
    s.no_mode.a = a;
    s.no_mode.b = b;
    if (n) {
      s.crossed.n_crosses = *n;
      s.no_mode.n_pieces = *n;
    }
    s.gaussian_segments = segments;
    return s;
  }

  std::optional<g::GallerySpec> gallery_spec() const {
    if (gallery.empty()) {
      return std::nullopt;
    }
    return spec(g::parse_gallery_id(gallery));
  }

  Measure load() const {
    if (!path.empty()) {
      return load_measure(path);
    }
    if (auto s = gallery_spec()) {
      return g::build(*s);
    }
    throw std::invalid_argument("give --measure <file> or --gallery <id>");
  }
};

// Endpoints, midpoints and pairwise crossings: where ball masses peak.
std::vector<Point> candidate_points(const Measure& m) {
  std::vector<Point> out;
  if (m.dim() == 1) {
    for (const auto& iv : m.intervals()) {
      out.emplace_back(iv.lo());
      out.emplace_back(0.5 * (iv.lo() + iv.hi()));
      out.emplace_back(iv.hi());
    }
    return out;
  }
  const auto segs = m.segments();
  for (const auto& s : segs) {
    out.push_back(s.a());
    out.push_back(0.5 * (s.a() + s.b()));
    out.push_back(s.b());
  }
  if (segs.size() > 2000) {
    return out;
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Point p = segs[i].a(), d = segs[i].b() - segs[i].a();
      const Point q = segs[j].a(), e = segs[j].b() - segs[j].a();
      const double den = d.x() * e.y() - d.y() * e.x();
      if (std::abs(den) < 1e-14) {
        continue;
      }
      const Point w = q - p;
      const double t = (w.x() * e.y() - w.y() * e.x()) / den;
      const double s = (w.x() * d.y() - w.y() * d.x()) / den;
      if (t > 0.0 && t < 1.0 && s > 0.0 && s < 1.0) {
        out.push_back(p + t * d);
      }
    }
  }
  return out;
}

struct ScheduleOptions {
  std::string kind = "dyadic";
  double r0 = 0.5;
  int k = 24;
  double factor = 0.5;
  int band_first = 1;
  int band_count = 6;
  std::size_t tail = 6;
  std::string radii;

  void add_to(CLI::App* app) {
    app->add_option("--schedule", kind, "Radius schedule")
        ->check(CLI::IsMember({"dyadic", "band", "geometric", "list"}));
    app->add_option("--r0", r0, "First radius (dyadic, geometric)");
    app->add_option("--K", k, "Last exponent: radii r0 * factor^k for k = 0..K");
    app->add_option("--factor", factor, "Geometric ratio in (0, 1)");
    app->add_option("--band-first", band_first, "First crossed-squares band index");
    app->add_option("--band-count", band_count, "Number of bands");
    app->add_option("--tail", tail, "Tail window used for limit estimates");
    app->add_option("--radii", radii, "Comma-separated decreasing radii (list schedule)");
  }

  RadiusSchedule build() const {
    if (kind == "band") {
      return RadiusSchedule::band(band_first, band_count,
                                  std::min(tail, static_cast<std::size_t>(band_count)));
    }
    if (kind == "geometric") {
      return RadiusSchedule::geometric(r0, factor, k + 1, tail);
    }
    if (kind == "list") {
      auto values = parse_numbers(radii);
      const std::size_t w = std::min(tail, values.size());
      return RadiusSchedule(std::move(values), w);
    }
    return RadiusSchedule::dyadic(r0, k, tail);
  }
};

struct ClassifyOptions {
  MeasureSource source;
  ScheduleOptions schedule;
  std::string u;
  std::string norm = "linf";
  std::string translates = "auto";
  std::string grid_box;
  double grid_spacing = 0.0;
  double tol = kDefaultTol;
  std::string v_norm = "l2";
  double v_radius = 0.25;
  std::string v_star;
  double r_star = 0.99;
  std::string out_verdict;
  std::string out_trace;
  std::string out_svg;
};

void add_classify_options(CLI::App* sub, ClassifyOptions& o, const std::vector<std::string>& ids) {
  o.source.add_to(sub, ids);
  o.schedule.add_to(sub);
  sub->add_option("--u", o.u, "Candidate point, e.g. 1,0")->required();
  sub->add_option("--norm", o.norm, "Ball shape: l1, l2 or linf");
  sub->add_option("--E", o.translates,
                  "Translates 'x,y;x,y;...' or 'auto' (u minus gallery and structural points)");
  sub->add_option("--grid-box", o.grid_box, "Search box x0,x1[,y0,y1]; default covers the support");
  sub->add_option("--grid-spacing", o.grid_spacing, "Search grid spacing");
  sub->add_option("--tol", o.tol, "Tolerance on ratios")->check(CLI::PositiveNumber);
  sub->add_option("--out-verdict", o.out_verdict, "Verdict JSON path");
  sub->add_option("--out-trace", o.out_trace, "Ratio trace CSV path");
  sub->add_option("--out-svg", o.out_svg, "Ratio chart SVG path");
}

std::vector<Point> structural_points(const ClassifyOptions& o, const Measure& m) {
  std::vector<Point> pts = candidate_points(m);
  if (auto spec = o.source.gallery_spec()) {
    const auto extra = g::points_of_interest(*spec);
    pts.insert(pts.begin(), extra.begin(), extra.end());
  }
  return pts;
}

TranslationSet translate_set(const ClassifyOptions& o, const Measure& m, const Point& u) {
  if (o.translates != "auto") {
    return TranslationSet(parse_points(o.translates));
  }
  std::vector<Point> vs;
  for (const auto& p : structural_points(o, m)) {
    if (!(p == u)) {
      vs.push_back(u - p);
    }
  }
  return TranslationSet(std::move(vs));
}

TranslationSet search_grid(const ClassifyOptions& o, const Measure& m,
                           const RadiusSchedule& sched) {
  std::optional<GridSpec> grid;
  if (!o.grid_box.empty()) {
    const auto v = parse_numbers(o.grid_box);
    if (v.size() != 2 && v.size() != 4) {
      throw std::invalid_argument("--grid-box needs 2 or 4 numbers");
    }
    if (!(o.grid_spacing > 0.0)) {
      throw std::invalid_argument("--grid-box needs a positive --grid-spacing");
    }
    Box box{static_cast<int>(v.size() / 2), {v[0], v.size() == 4 ? v[2] : 0.0},
            {v[1], v.size() == 4 ? v[3] : 0.0}};
    grid = GridSpec{box, o.grid_spacing};
  } else if (o.grid_spacing > 0.0) {
    grid = GridSpec{m.bounding_box().inflated(sched.max_radius()), o.grid_spacing};
  } else {
    grid = auto_search_grid(m, sched).grid_spec();
  }
  return TranslationSet(structural_points(o, m), grid, true);
}

int classify(const std::string& which, const ClassifyOptions& o, std::ostream& out) {
  const Measure m = o.source.load();
  const SmallBallMap f(m, parse_norm(o.norm));
  const Point u = parse_point(o.u);
  const RadiusSchedule sched = o.schedule.build();

  Verdict v;
  if (which == "weak") {
    v = check_weak_mode(f, u, translate_set(o, m, u), sched, o.tol);
  } else if (which == "strong") {
    v = check_strong_mode(f, u, search_grid(o, m, sched), sched, o.tol);
  } else if (which == "estrong") {
    v = check_E_strong_mode(f, u, translate_set(o, m, u), sched, o.tol);
  } else if (which == "local") {
    v = check_local_mode(f, u, Neighbourhood{parse_norm(o.v_norm), o.v_radius}, sched, o.tol,
                         search_grid(o, m, sched));
  } else if (which == "uniformity") {
    if (o.v_star.empty()) {
      throw std::invalid_argument("uniformity needs --v-star");
    }
    auto e = translate_set(o, m, u);
    auto pts = e.explicit_points();
    const Point vs = parse_point(o.v_star);
    if (std::find(pts.begin(), pts.end(), vs) == pts.end()) {
      pts.push_back(vs);
    }
    v = check_uniformity(f, u, vs, TranslationSet(std::move(pts)), o.r_star, sched, o.tol);
  } else {
    v = check_clr(f, u, translate_set(o, m, u), search_grid(o, m, sched), sched, o.tol);
  }

  if (!o.out_trace.empty() && !v.evidence.empty()) {
    write_file_atomic(o.out_trace, v.evidence.front().to_csv());
  }
  if (!o.out_svg.empty()) {
    std::vector<report::Curve> curves;
    for (std::size_t i = 0; i < v.evidence.size() && i < 8; ++i) {
      const auto& t = v.evidence[i];
      curves.push_back(report::curve_of(t, t.z ? "z = " + t.z->to_string() : "sup"));
    }
    write_file_atomic(o.out_svg, report::ratio_chart_svg(curves, which + " check at u = " +
                                                                     u.to_string()));
  }
  const std::string json = report::verdict_to_json(v, o.out_trace).dump(2) + "\n";
  if (!o.out_verdict.empty()) {
    write_file_atomic(o.out_verdict, json);
  }
  out << json;
  return kExitOk;
}

// ---- reproduce ----

struct ReproduceOptions {
  std::string out_dir = ".";
  bool csv = false;
  bool svg = false;
  MeasureSource params;
};

std::string status_str(const Verdict& v) { return std::string(to_string(v.status)); }

class Outputs {
 public:
  Outputs(const ReproduceOptions& o, std::ostream& out)
      : dir_(o.out_dir), csv_(o.csv || !o.svg), svg_(o.svg || !o.csv), out_(out) {
    fs::create_directories(dir_);
  }

  void csv(const std::string& name, const std::string& body) {
    if (csv_) {
      emit(name, body);
    }
  }
  void svg(const std::string& name, const std::string& body) {
    if (svg_) {
      emit(name, body);
    }
  }

 private:
  void emit(const std::string& name, const std::string& body) {
    const auto path = dir_ / name;
    write_file_atomic(path, body);
    out_ << "wrote " << path.string() << "\n";
  }

  fs::path dir_;
  bool csv_;
  bool svg_;
  std::ostream& out_;
};

void reproduce_k_dependence(Outputs& files, std::ostream& out) {
  const auto rep = reproduce::k_dependence();
  std::ostringstream masses;
  masses << "centre,norm,r,computed,expected\n";
  for (const auto& row : rep.masses) {
    masses << '"' << row.centre.to_string() << "\"," << to_string(row.norm) << ',' << fmt(row.r)
           << ',' << fmt(row.computed) << ',' << fmt(row.expected) << "\n";
  }
  files.csv("closed_forms.csv", masses.str());

  std::ostringstream matrix;
  matrix << "centre,norm,status,limsup_est,liminf_est\n";
  std::vector<report::Curve> curves;
  out << "strong-mode matrix (centre x norm):\n";
  for (const auto& cell : rep.strong_matrix) {
    matrix << cell.name << ',' << to_string(cell.norm) << ',' << status_str(cell.verdict) << ','
           << fmt(cell.verdict.limsup_est) << ',' << fmt(cell.verdict.liminf_est) << "\n";
    out << "  " << cell.name << ' ' << to_string(cell.norm) << ": " << status_str(cell.verdict)
        << " (limsup " << fmt(cell.verdict.limsup_est) << ")\n";
    curves.push_back(report::curve_of(cell.verdict.evidence.front(),
                                      cell.name + " " + std::string(to_string(cell.norm))));
  }
  files.csv("verdict_matrix.csv", matrix.str());

  std::ostringstream local;
  local << "point,norm,status,limsup_est,liminf_est\n";
  for (const auto& cell : rep.local_modes) {
    local << cell.name << ',' << to_string(cell.norm) << ',' << status_str(cell.verdict) << ','
          << fmt(cell.verdict.limsup_est) << ',' << fmt(cell.verdict.liminf_est) << "\n";
  }
  files.csv("local_modes.csv", local.str());

  files.svg("ratios.svg", report::ratio_chart_svg(curves, "sup ratio vs radius, K-dependence"));
  const std::vector<Point> marks{Point(1.0, 0.0), Point(-1.0, 0.0)};
  files.svg("support.svg", report::support_svg(g::build_k_dependence(), marks, "K-dependence support"));
}

void reproduce_crossed_squares(const ReproduceOptions& o, Outputs& files, std::ostream& out) {
  g::CrossedSquaresParams p;
  p.alpha = o.params.alpha;
  if (o.params.n) {
    p.n_crosses = *o.params.n;
  }
  const auto rep = reproduce::crossed_squares(p);

  std::ostringstream bands;
  bands << "n,r,f_vn,f_v0,ratio,inside_band\n";
  for (const auto& row : rep.bands) {
    bands << row.n << ',' << fmt(row.r) << ',' << fmt(row.f_vn) << ',' << fmt(row.f_v0) << ','
          << fmt(row.ratio) << ',' << (row.inside_band ? "yes" : "no") << "\n";
    out << "band n=" << row.n << ": ratio " << fmt(row.ratio)
        << (row.inside_band ? " inside" : " outside") << " (5/4, 1+alpha)\n";
  }
  files.csv("bands.csv", bands.str());

  std::ostringstream cases;
  cases << "case,x,y,r,ratio\n";
  for (const auto& row : rep.cases) {
    cases << row.name << ',' << fmt(row.point.x()) << ',' << fmt(row.point.y()) << ','
          << fmt(row.r) << ',' << fmt(row.ratio) << "\n";
  }
  files.csv("case_points.csv", cases.str());

  std::ostringstream verdicts;
  verdicts << "k,weak,weak_limsup,estrong,estrong_limsup,uniformity_violated,uniformity_sampled\n";
  std::vector<report::Curve> curves;
  for (const auto& c : rep.centres) {
    const auto violated = std::count_if(c.uniformity.begin(), c.uniformity.end(), [](const Verdict& v) {
      return v.status == Status::Violated;
    });
    verdicts << c.k << ',' << status_str(c.weak) << ',' << fmt(c.weak.limsup_est) << ','
             << status_str(c.e_strong) << ',' << fmt(c.e_strong.limsup_est) << ',' << violated
             << ',' << c.uniformity.size() << "\n";
    out << "v_" << c.k << ": weak " << status_str(c.weak) << ", E-strong "
        << status_str(c.e_strong) << " (limsup " << fmt(c.e_strong.limsup_est) << ")\n";
    curves.push_back(report::curve_of(c.e_strong.evidence.front(), "u = v_" + std::to_string(c.k)));
  }
  files.csv("verdicts.csv", verdicts.str());
  files.svg("ratios.svg", report::ratio_chart_svg(curves, "E-sup ratio on the band schedule"));

  std::vector<Point> marks;
  for (int n = 0; n < p.n_crosses; ++n) {
    marks.push_back(g::crossed_squares_centre(n));
  }
  files.svg("support.svg", report::support_svg(g::build_crossed_squares(p), marks,
                                               "crossed squares support"));
}

void reproduce_no_mode(const ReproduceOptions& o, Outputs& files, std::ostream& out) {
  g::NoModeParams p;
  p.a = o.params.a;
  p.b = o.params.b;
  if (o.params.n) {
    p.n_pieces = *o.params.n;
  }
  const auto rep = reproduce::no_mode(p);

  std::ostringstream masses;
  masses << "n,computed,expected\n";
  for (const auto& row : rep.masses) {
    masses << row.n << ',' << fmt(row.computed) << ',' << fmt(row.expected) << "\n";
  }
  files.csv("piece_masses.csv", masses.str());

  std::ostringstream cands;
  cands << "u,witness_r,witness_ratio,violates,strong,strong_limsup\n";
  std::vector<report::Curve> curves;
  for (const auto& c : rep.candidates) {
    cands << c.u << ',' << fmt(c.witness_r) << ',' << fmt(c.witness_ratio) << ','
          << (c.witness_ratio > 1.0 ? "yes" : "no") << ',' << status_str(c.strong) << ','
          << fmt(c.strong.limsup_est) << "\n";
    out << "u=" << c.u << ": witness ratio " << fmt(c.witness_ratio) << ", strong "
        << status_str(c.strong) << "\n";
    curves.push_back(report::curve_of(c.strong.evidence.front(), "u = " + std::to_string(c.u)));
  }
  files.csv("candidates.csv", cands.str());
  files.svg("ratios.svg", report::ratio_chart_svg(curves, "sup ratio vs radius, no-mode density"));

  std::vector<Point> marks;
  for (const auto& c : rep.candidates) {
    marks.emplace_back(static_cast<double>(c.u));
  }
  files.svg("support.svg", report::support_svg(g::build_no_mode_density(p), marks,
                                               "no-mode density support"));
}

// ---- oracle ----

struct OracleOptions {
  std::uint64_t seed = 0;
  int cases = 100;
  std::uint64_t samples = 100'000;
  std::uint64_t subdivisions = 100'000;
  unsigned workers = 0;
  std::string out_path;
};

int oracle_compare(const OracleOptions& o, std::ostream& out) {
  const unsigned workers =
      o.workers > 0 ? o.workers : std::max(1u, std::thread::hardware_concurrency());
  std::ostringstream csv;
  csv << "case_id,exact,mc_estimate,std_error,quadrature,pass_fail\n";
  int passed = 0;
  const auto cases = oracle::random_oracle_cases(o.seed, o.cases);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    const double exact = ball_mass(c.measure, c.ball);
    const auto mc = oracle::mc_ball_mass(c.measure, c.ball, {o.samples, o.seed + 1 + i}, workers);
    const double quad = oracle::quadrature_ball_mass(c.measure, c.ball, o.subdivisions);
    const double slack = 1e-12 * total_mass(c.measure);
    const bool ok = std::abs(mc.estimate - exact) <= 5.0 * mc.std_error + slack &&
                    std::abs(quad - exact) <=
                        oracle::quadrature_error_bound(c.measure, o.subdivisions) + slack;
    passed += ok ? 1 : 0;
    csv << c.id << ',' << fmt(exact) << ',' << fmt(mc.estimate) << ',' << fmt(mc.std_error) << ','
        << fmt(quad) << ',' << (ok ? "pass" : "fail") << "\n";
  }
  if (o.out_path.empty()) {
    out << csv.str();
  } else {
    write_file_atomic(o.out_path, csv.str());
    out << passed << "/" << cases.size() << " cases agree; wrote " << o.out_path << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact small-ball masses and mode classification for segment and step measures",
               "smallball"};
  app.set_config("--config", "", "Run-config file (TOML or INI) mirroring the flags");
  app.require_subcommand(1);

  std::vector<std::string> ids;
  for (const auto id : g::gallery_ids()) {
    ids.emplace_back(id);
  }

  // gallery
  auto* gallery = app.add_subcommand("gallery", "List or build the built-in measures");
  gallery->require_subcommand(1);
  auto* glist = gallery->add_subcommand("list", "Print gallery ids");
  auto* gbuild = gallery->add_subcommand("build", "Write a gallery measure as JSON");
  std::string build_id;
  std::string build_out;
  MeasureSource build_params;
  gbuild->add_option("id", build_id, "Gallery id")->required()->check(CLI::IsMember(ids));
  gbuild->add_option("--out", build_out, "Output path (stdout if omitted)");
  build_params.add_params(gbuild);

  // mass
  auto* mass = app.add_subcommand("mass", "Print the ball mass mu(center + r K)");
  MeasureSource mass_src;
  std::string mass_center;
  double mass_r = 0.0;
  std::string mass_norm = "linf";
  mass_src.add_to(mass, ids);
  mass->add_option("--center", mass_center, "Ball centre, e.g. -1,0")->required();
  mass->add_option("--r", mass_r, "Radius")->required();
  mass->add_option("--norm", mass_norm, "Ball shape: l1, l2 or linf");

  // classify
  auto* cls = app.add_subcommand("classify", "Classify a candidate point from ratio traces");
  cls->require_subcommand(1);
  ClassifyOptions copt;
  std::string which;
  for (const char* name : {"weak", "strong", "estrong", "local", "uniformity", "clr"}) {
    auto* sub = cls->add_subcommand(name);
    add_classify_options(sub, copt, ids);
    if (std::string_view(name) == "local") {
      sub->add_option("--V-norm", copt.v_norm, "Neighbourhood norm");
      sub->add_option("--V-radius", copt.v_radius, "Neighbourhood radius");
    }
    if (std::string_view(name) == "uniformity") {
      sub->add_option("--v-star", copt.v_star, "Dominating translate")->required();
      sub->add_option("--r-star", copt.r_star, "Radius below which v-star must dominate");
    }
    sub->callback([&which, name] { which = name; });
  }
  cls->description("weak | strong | estrong | local | uniformity | clr");

  // reproduce
  auto* rep = app.add_subcommand("reproduce", "Regenerate the counterexample reports");
  ReproduceOptions ropt;
  std::string example;
  rep->add_option("example", example, "Which construction")
      ->required()
      ->check(CLI::IsMember({"example-4.2", "example-5.2", "example-5.3"}));
  rep->add_option("--out-dir", ropt.out_dir, "Directory for CSV and SVG files");
  rep->add_flag("--csv", ropt.csv, "Write CSV tables");
  rep->add_flag("--svg", ropt.svg, "Write SVG plots");
  ropt.params.add_params(rep);

  // oracle
  auto* orc = app.add_subcommand("oracle", "Independent cross-checks of ball_mass");
  orc->require_subcommand(1);
  auto* cmp = orc->add_subcommand("compare", "Exact vs Monte Carlo vs quadrature CSV");
  OracleOptions oopt;
  cmp->add_option("--seed", oopt.seed, "Seed for cases and sampling");
  cmp->add_option("--cases", oopt.cases, "Number of random cases")->check(CLI::PositiveNumber);
  cmp->add_option("--samples", oopt.samples, "Monte Carlo samples per case");
  cmp->add_option("--subdivisions", oopt.subdivisions, "Quadrature pieces per component");
  cmp->add_option("--workers", oopt.workers, "Monte Carlo threads (0 = hardware)");
  cmp->add_option("--out", oopt.out_path, "CSV path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (glist->parsed()) {
      for (const auto& id : ids) {
        out << id << "\n";
      }
      return kExitOk;
    }
    if (gbuild->parsed()) {
      const std::string json =
          dump_measure(g::build(build_params.spec(g::parse_gallery_id(build_id)))) + "\n";
      if (build_out.empty()) {
        out << json;
      } else {
        write_file_atomic(build_out, json);
      }
      return kExitOk;
    }
    if (mass->parsed()) {
      const Measure m = mass_src.load();
      const double value = ball_mass(m, Ball(parse_point(mass_center), mass_r, parse_norm(mass_norm)));
      out << fmt(value) << "\n";
      return kExitOk;
    }
    if (cls->parsed()) {
      return classify(which, copt, out);
    }
    if (rep->parsed()) {
      Outputs files(ropt, out);
      if (example == "example-5.3") {
        reproduce_k_dependence(files, out);
      } else if (example == "example-4.2") {
        reproduce_crossed_squares(ropt, files, out);
      } else {
        reproduce_no_mode(ropt, files, out);
      }
      return kExitOk;
    }
    if (cmp->parsed()) {
      return oracle_compare(oopt, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace smallball::cli
