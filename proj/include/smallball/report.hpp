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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "smallball/modes.hpp"

namespace smallball::report {

/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// {status, limsup_est, liminf_est, tol, worst_translate, trace_file}
nlohmann::ordered_json verdict_to_json(const Verdict& v, const std::string& trace_file = {});

/// 17 significant digits, enough to round-trip any double; used for all CSV numbers.
std::string fmt(double x);

struct Curve {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (r, ratio)
};

/// Ratio-versus-radius line chart with a logarithmic radius axis.
std::string ratio_chart_svg(std::span<const Curve> curves, std::string_view title);

/// Support plot: segments as lines, 1-D pieces as bars on a log-height scale,
/// `marks` as small squares.
std::string support_svg(const Measure& m, std::span<const Point> marks, std::string_view title);

Curve curve_of(const RatioTrace& trace, std::string label);

}  // namespace smallball::report
