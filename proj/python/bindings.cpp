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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smallball/density_checks.hpp"
#include "smallball/gallery.hpp"
#include "smallball/measure.hpp"
#include "smallball/measure_json.hpp"
#include "smallball/modes.hpp"
#include "smallball/oracle.hpp"
#include "smallball/report.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace smallball;

namespace {

Point point_from(const std::vector<double>& c) { return Point::from(c); }

py::tuple point_tuple(const Point& p) {
  if (p.dim() == 1) {
    return py::make_tuple(p.x());
  }
  return py::make_tuple(p.x(), p.y());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact small-ball masses and mode classification";

  py::register_exception<NotInSupport>(m, "NotInSupport", PyExc_RuntimeError);

  py::class_<Point>(m, "Point")
      .def(py::init<double>(), "x"_a)
      .def(py::init<double, double>(), "x"_a, "y"_a)
      .def(py::init(&point_from), "coords"_a)
      .def_property_readonly("dim", &Point::dim)
      .def_property_readonly("x", &Point::x)
      .def_property_readonly("y", &Point::y)
      .def("to_tuple", &point_tuple)
      .def("__eq__", [](const Point& a, const Point& b) { return a == b; })
      .def("__repr__", [](const Point& p) { return "Point" + p.to_string(); });
  py::implicitly_convertible<py::tuple, Point>();
  py::implicitly_convertible<py::list, Point>();
  py::implicitly_convertible<py::float_, Point>();
  py::implicitly_convertible<py::int_, Point>();

  py::enum_<Norm>(m, "Norm")
      .value("L1", Norm::L1)
      .value("L2", Norm::L2)
      .value("Linf", Norm::Linf);
  m.def("parse_norm", &parse_norm, "text"_a);

  py::class_<Ball>(m, "Ball")
      .def(py::init<Point, double, Norm>(), "center"_a, "radius"_a, "norm"_a = Norm::Linf)
      .def_property_readonly("center", &Ball::center)
      .def_property_readonly("radius", &Ball::radius)
      .def_property_readonly("norm", &Ball::norm)
      .def("contains", &Ball::contains, "p"_a);

  py::class_<Segment>(m, "Segment")
      .def(py::init<Point, Point, double>(), "a"_a, "b"_a, "density"_a = 1.0)
      .def_property_readonly("a", &Segment::a)
      .def_property_readonly("b", &Segment::b)
      .def_property_readonly("density", &Segment::density)
      .def_property_readonly("mass", &Segment::mass);

  py::class_<Interval>(m, "Interval")
      .def(py::init<double, double, double>(), "lo"_a, "hi"_a, "height"_a)
      .def_property_readonly("lo", &Interval::lo)
      .def_property_readonly("hi", &Interval::hi)
      .def_property_readonly("height", &Interval::height)
      .def_property_readonly("mass", &Interval::mass);

  py::class_<Measure>(m, "Measure")
      .def_static("planar", &Measure::planar, "segments"_a, "label"_a = "")
      .def_static("linear", &Measure::linear, "intervals"_a, "label"_a = "")
      .def_static("from_json", &parse_measure, "text"_a)
      .def("to_json", [](const Measure& ms) { return dump_measure(ms); })
      .def_property_readonly("dim", &Measure::dim)
      .def_property_readonly("label", &Measure::label)
      .def_property_readonly("segments", [](const Measure& ms) {
        return std::vector<Segment>(ms.segments().begin(), ms.segments().end());
      })
      .def_property_readonly("intervals", [](const Measure& ms) {
        return std::vector<Interval>(ms.intervals().begin(), ms.intervals().end());
      })
      .def("__len__", &Measure::size);

  m.def("ball_mass", &ball_mass, "measure"_a, "ball"_a);
  m.def("mass", [](const Measure& ms, const Point& c, double r, Norm norm) {
    return ball_mass(ms, Ball(c, r, norm));
  }, "measure"_a, "center"_a, "r"_a, "norm"_a = Norm::Linf);
  m.def("total_mass", &total_mass, "measure"_a);
  m.def("load_measure", [](const std::string& path) { return load_measure(path); }, "path"_a);

  py::class_<RadiusSchedule>(m, "RadiusSchedule")
      .def(py::init<std::vector<double>, std::size_t>(), "radii"_a, "tail_window"_a = 6)
      .def_static("dyadic", &RadiusSchedule::dyadic, "r0"_a = 0.5, "k_max"_a = 24,
                  "tail_window"_a = 6)
      .def_static("band", &RadiusSchedule::band, "first"_a, "count"_a, "tail_window"_a = 6)
      .def_static("geometric", &RadiusSchedule::geometric, "r0"_a, "factor"_a, "count"_a,
                  "tail_window"_a = 6)
      .def_property_readonly("radii", [](const RadiusSchedule& s) {
        return std::vector<double>(s.radii().begin(), s.radii().end());
      })
      .def_property_readonly("tail_window", &RadiusSchedule::tail_window);

  py::class_<Box>(m, "Box")
      .def(py::init([](std::vector<double> lo, std::vector<double> hi) {
             if (lo.size() != hi.size() || lo.empty() || lo.size() > 2) {
               throw std::invalid_argument("box corners need matching 1 or 2 coordinates");
             }
             Box b{static_cast<int>(lo.size()), {lo[0], lo.size() == 2 ? lo[1] : 0.0},
                   {hi[0], hi.size() == 2 ? hi[1] : 0.0}};
             return b;
           }),
           "lo"_a, "hi"_a);

  py::class_<TranslationSet>(m, "TranslationSet")
      .def(py::init([](std::vector<Point> pts) { return TranslationSet(std::move(pts)); }),
           "points"_a)
      .def_static("grid", &TranslationSet::grid, "box"_a, "spacing"_a, "dense_intent"_a = true)
      .def("materialize", &TranslationSet::materialize, "dim"_a);
  m.def("auto_search_grid", &auto_search_grid, "measure"_a, "schedule"_a,
        "max_per_axis"_a = 512);

  py::class_<SmallBallMap>(m, "SmallBallMap")
      .def(py::init<Measure, Norm>(), "measure"_a, "norm"_a = Norm::Linf)
      .def("__call__", &SmallBallMap::operator(), "x"_a, "r"_a)
      .def_property_readonly("norm", &SmallBallMap::norm);

  py::class_<RatioRow>(m, "RatioRow")
      .def_readonly("r", &RatioRow::r)
      .def_readonly("numerator", &RatioRow::numerator)
      .def_readonly("denominator", &RatioRow::denominator)
      .def_readonly("ratio", &RatioRow::ratio);
  py::class_<RatioTrace>(m, "RatioTrace")
      .def_readonly("u", &RatioTrace::u)
      .def_readonly("z", &RatioTrace::z)
      .def_readonly("rows", &RatioTrace::rows)
      .def("to_csv", &RatioTrace::to_csv);

  py::enum_<Status>(m, "Status")
      .value("Satisfied", Status::Satisfied)
      .value("Violated", Status::Violated)
      .value("Inconclusive", Status::Inconclusive);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("status", &Verdict::status)
      .def_readonly("limsup_est", &Verdict::limsup_est)
      .def_readonly("liminf_est", &Verdict::liminf_est)
      .def_readonly("tol", &Verdict::tol)
      .def_readonly("evidence", &Verdict::evidence)
      .def_readonly("worst_translate", &Verdict::worst_translate)
      .def("to_json", [](const Verdict& v) { return report::verdict_to_json(v).dump(); });

  py::class_<Neighbourhood>(m, "Neighbourhood")
      .def(py::init<Norm, double>(), "norm"_a = Norm::L2, "radius"_a = 0.25);

  m.def("ratio_trace", &ratio_trace, "f"_a, "u"_a, "z"_a, "schedule"_a);
  m.def("check_weak_mode", &check_weak_mode, "f"_a, "u"_a, "translates"_a, "schedule"_a,
        "tol"_a = kDefaultTol);
  m.def("check_strong_mode", &check_strong_mode, "f"_a, "u"_a, "search_grid"_a, "schedule"_a,
        "tol"_a = kDefaultTol);
  m.def("check_E_strong_mode", &check_E_strong_mode, "f"_a, "u"_a, "translates"_a,
        "schedule"_a, "tol"_a = kDefaultTol);
  m.def("check_local_mode", &check_local_mode, "f"_a, "u"_a, "neighbourhood"_a, "schedule"_a,
        "tol"_a, "search_grid"_a);
  m.def("check_uniformity", &check_uniformity, "f"_a, "u"_a, "v_star"_a, "translates"_a,
        "r_star"_a, "schedule"_a, "tol"_a = kDefaultTol);
  m.def("check_clr", &check_clr, "f"_a, "u"_a, "translates"_a, "search_grid"_a, "schedule"_a,
        "tol"_a = kDefaultTol);
  m.def("density_at", &density_at, "measure"_a, "x"_a);

  auto gal = m.def_submodule("gallery", "Built-in counterexample measures");
  gal.def("crossed_squares", [](double alpha, int n) {
    return gallery::build_crossed_squares({alpha, n});
  }, "alpha"_a = 0.875, "n_crosses"_a = 12);
  gal.def("no_mode", [](double a, double b, int n) {
    return gallery::build_no_mode_density({a, b, n});
  }, "a"_a = 2.0, "b"_a = 4.0, "n_pieces"_a = 16);
  gal.def("k_dependence", &gallery::build_k_dependence);
  gal.def("two_line_gaussian", &gallery::build_two_line_gaussian, "segments"_a = 400);
  gal.def("crossed_squares_centre", &gallery::crossed_squares_centre, "n"_a);
  gal.def("ids", [] {
    std::vector<std::string> out;
    for (auto id : gallery::gallery_ids()) out.emplace_back(id);
    return out;
  });

  auto orc = m.def_submodule("oracle", "Independent estimates of ball masses");
  orc.def("mc_ball_mass", [](const Measure& ms, const Ball& b, std::uint64_t n, std::uint64_t seed,
                             unsigned workers) {
    const auto est = oracle::mc_ball_mass(ms, b, {n, seed}, workers);
    return py::make_tuple(est.estimate, est.std_error);
  }, "measure"_a, "ball"_a, "n_samples"_a = 100'000, "seed"_a = 0, "workers"_a = 1);
  orc.def("quadrature_ball_mass", &oracle::quadrature_ball_mass, "measure"_a, "ball"_a,
          "subdivisions"_a);
}
