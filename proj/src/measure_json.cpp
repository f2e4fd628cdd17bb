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

#include "smallball/measure_json.hpp"

#include <fstream>
#include <sstream>

namespace smallball {

using nlohmann::json;

namespace {

json point_json(const Point& p) { return json::array({p.x(), p.y()}); }

Point point_from(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("segment endpoints must be [x, y] arrays");
  }
  return Point(j.at(0).get<double>(), j.at(1).get<double>());
}

}  // namespace

json measure_to_json(const Measure& m) {
  json components = json::array();
  for (const auto& s : m.segments()) {
    components.push_back({{"type", "segment"},
                          {"a", point_json(s.a())},
                          {"b", point_json(s.b())},
                          {"density", s.density()}});
  }
  for (const auto& iv : m.intervals()) {
    components.push_back(
        {{"type", "interval"}, {"lo", iv.lo()}, {"hi", iv.hi()}, {"height", iv.height()}});
  }
  return {{"dim", m.dim()}, {"label", m.label()}, {"components", components}};
}

Measure measure_from_json(const json& j) {
  try {
    const int dim = j.at("dim").get<int>();
    std::string label = j.value("label", std::string{});
    const json& components = j.at("components");
    if (dim == 2) {
      std::vector<Segment> segments;
      for (const auto& c : components) {
        if (c.at("type").get<std::string>() != "segment") {
          throw std::invalid_argument("a 2-D measure holds only segment components");
        }
        segments.emplace_back(point_from(c.at("a")), point_from(c.at("b")),
                              c.at("density").get<double>());
      }
      return Measure::planar(std::move(segments), std::move(label));
    }
    if (dim == 1) {
      std::vector<Interval> intervals;
      for (const auto& c : components) {
        if (c.at("type").get<std::string>() != "interval") {
          throw std::invalid_argument("a 1-D measure holds only interval components");
        }
        intervals.emplace_back(c.at("lo").get<double>(), c.at("hi").get<double>(),
                               c.at("height").get<double>());
      }
      return Measure::linear(std::move(intervals), std::move(label));
    }
    throw std::invalid_argument("measure dim must be 1 or 2");
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed measure JSON: ") + e.what());
  }
}

std::string dump_measure(const Measure& m, int indent) { return measure_to_json(m).dump(indent); }

Measure parse_measure(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("measure JSON does not parse: ") + e.what());
  }
  return measure_from_json(j);
}

Measure load_measure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read measure file " + path.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_measure(buf.str());
}

}  // namespace smallball
