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

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "smallball/measure.hpp"

namespace smallball {

// Schema:
//   {"dim": 1|2, "label": str,
//    "components": [{"type": "segment", "a": [x, y], "b": [x, y], "density": w}
//                 | {"type": "interval", "lo": l, "hi": h, "height": g}]}
// Doubles are written in shortest round-trip form, so a reload is bit-exact.

nlohmann::json measure_to_json(const Measure& m);
Measure measure_from_json(const nlohmann::json& j);

std::string dump_measure(const Measure& m, int indent = 2);
Measure parse_measure(std::string_view text);

Measure load_measure(const std::filesystem::path& path);

}  // namespace smallball
