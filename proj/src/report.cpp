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

#include "smallball/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

namespace smallball::report {

namespace {

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string escape(std::string_view text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Svg {
 public:
  Svg(double width, double height) : width_(width), height_(height) {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
         << "\" height=\"" << height << "\">\n";
    rect(0, 0, width, height, "#ffffff");
  }

  void line(double x1, double y1, double x2, double y2, std::string_view color, double w = 1.0) {
    out_ << "<line x1=\"" << fmt2(x1) << "\" y1=\"" << fmt2(y1) << "\" x2=\"" << fmt2(x2)
         << "\" y2=\"" << fmt2(y2) << "\" stroke=\"" << color << "\" stroke-width=\"" << fmt2(w)
         << "\"/>\n";
  }

  void rect(double x, double y, double w, double h, std::string_view fill) {
    out_ << "<rect x=\"" << fmt2(x) << "\" y=\"" << fmt2(y) << "\" width=\"" << fmt2(w)
         << "\" height=\"" << fmt2(h) << "\" fill=\"" << fill << "\"/>\n";
  }

  void text(double x, double y, std::string_view s, int size = 12,
            std::string_view anchor = "start") {
    out_ << "<text x=\"" << fmt2(x) << "\" y=\"" << fmt2(y) << "\" font-family=\"sans-serif\" "
         << "font-size=\"" << size << "\" text-anchor=\"" << anchor << "\">" << escape(s)
         << "</text>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

  double width() const { return width_; }
  double height() const { return height_; }

 private:
  static std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
  }

  std::ostringstream out_;
  double width_;
  double height_;
};

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write " + tmp.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move " + tmp.string() + " to " + path.string() + ": " +
                             ec.message());
  }
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::ordered_json verdict_to_json(const Verdict& v, const std::string& trace_file) {
  nlohmann::ordered_json j{{"status", std::string(to_string(v.status))},
                   {"limsup_est", v.limsup_est},
                   {"liminf_est", v.liminf_est},
                   {"tol", v.tol}};
  if (v.worst_translate) {
    const auto& w = *v.worst_translate;
    j["worst_translate"] = w.dim() == 1 ? nlohmann::ordered_json::array({w.x()})
                                        : nlohmann::ordered_json::array({w.x(), w.y()});
  } else {
    j["worst_translate"] = nullptr;
  }
  j["trace_file"] = trace_file.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(trace_file);
  return j;
}

Curve curve_of(const RatioTrace& trace, std::string label) {
  Curve c{std::move(label), {}};
  for (const auto& row : trace.rows) {
    c.points.emplace_back(row.r, row.ratio);
  }
  return c;
}

std::string ratio_chart_svg(std::span<const Curve> curves, std::string_view title) {
  Svg svg(720, 440);
  const double left = 70, right = 170, top = 40, bottom = 50;
  const double pw = svg.width() - left - right;
  const double ph = svg.height() - top - bottom;

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = 1.0, ymax = 1.0;
  for (const auto& c : curves) {
    for (const auto& [r, ratio] : c.points) {
      xmin = std::min(xmin, std::log10(r));
      xmax = std::max(xmax, std::log10(r));
      if (std::isfinite(ratio)) {
        ymin = std::min(ymin, ratio);
        ymax = std::max(ymax, ratio);
      }
    }
  }
  if (!(xmax > xmin)) {
    xmin -= 1.0;
    xmax += 1.0;
  }
  const double pad = 0.05 * std::max(ymax - ymin, 0.1);
  ymin -= pad;
  ymax += pad;
  const auto px = [&](double r) { return left + (std::log10(r) - xmin) / (xmax - xmin) * pw; };
  const auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

  svg.text(left, 24, title, 14);
  svg.line(left, top + ph, left + pw, top + ph, "#000000");
  svg.line(left, top, left, top + ph, "#000000");
  for (int d = static_cast<int>(std::ceil(xmin)); d <= static_cast<int>(std::floor(xmax)); ++d) {
    const double x = px(std::pow(10.0, d));
    svg.line(x, top + ph, x, top + ph + 5, "#000000");
    svg.text(x, top + ph + 18, "1e" + std::to_string(d), 10, "middle");
  }
  for (int i = 0; i <= 4; ++i) {
    const double y = ymin + (ymax - ymin) * i / 4.0;
    svg.line(left - 5, py(y), left, py(y), "#000000");
    svg.text(left - 8, py(y) + 4, short_num(y), 10, "end");
  }
  svg.line(left, py(1.0), left + pw, py(1.0), "#999999", 0.5);
  svg.text(left + pw / 2, svg.height() - 12, "radius r (log scale)", 12, "middle");
  svg.text(14, top - 10, "ratio", 12);

  for (std::size_t i = 0; i < curves.size(); ++i) {
    const char* color = kPalette[i % kPalette.size()];
    const auto& pts = curves[i].points;
    for (std::size_t k = 1; k < pts.size(); ++k) {
      if (std::isfinite(pts[k - 1].second) && std::isfinite(pts[k].second)) {
        svg.line(px(pts[k - 1].first), py(pts[k - 1].second), px(pts[k].first),
                 py(pts[k].second), color, 1.5);
      }
    }
    const double ly = top + 16.0 * static_cast<double>(i);
    svg.line(left + pw + 10, ly, left + pw + 30, ly, color, 2.0);
    svg.text(left + pw + 34, ly + 4, curves[i].label, 11);
  }
  return svg.finish();
}

std::string support_svg(const Measure& m, std::span<const Point> marks, std::string_view title) {
  Svg svg(640, m.dim() == 2 ? 480 : 320);
  const double margin = 30;
  svg.text(margin, 20, title, 14);
  if (m.empty()) {
    return svg.finish();
  }
  Box box = m.bounding_box();
  for (const auto& p : marks) {
    box.lo[0] = std::min(box.lo[0], p.x());
    box.hi[0] = std::max(box.hi[0], p.x());
    if (m.dim() == 2) {
      box.lo[1] = std::min(box.lo[1], p.y());
      box.hi[1] = std::max(box.hi[1], p.y());
    }
  }
  const double pw = svg.width() - 2 * margin;
  const double ph = svg.height() - 2 * margin - 10;
  const double w = std::max(box.hi[0] - box.lo[0], 1e-9);

  if (m.dim() == 2) {
    const double h = std::max(box.hi[1] - box.lo[1], 1e-9);
    const double scale = std::min(pw / w, ph / h);
    const auto px = [&](double x) { return margin + (x - box.lo[0]) * scale; };
    const auto py = [&](double y) { return margin + 10 + (box.hi[1] - y) * scale; };
    for (const auto& s : m.segments()) {
      svg.line(px(s.a().x()), py(s.a().y()), px(s.b().x()), py(s.b().y()), "#000000",
               std::clamp(1.5 * s.density(), 0.3, 3.0));
    }
    for (const auto& p : marks) {
      svg.rect(px(p.x()) - 3, py(p.y()) - 3, 6, 6, "#d62728");
    }
    return svg.finish();
  }

  double hmax = 0.0;
  for (const auto& iv : m.intervals()) {
    hmax = std::max(hmax, iv.height());
  }
  const auto px = [&](double x) { return margin + (x - box.lo[0]) / w * pw; };
  const double base = margin + 10 + ph;
  svg.line(margin, base, margin + pw, base, "#000000");
  for (const auto& iv : m.intervals()) {
    const double frac = std::log2(1.0 + iv.height()) / std::log2(1.0 + std::max(hmax, 1e-300));
    const double bar = frac * ph;
    const double x0 = px(iv.lo());
    svg.rect(x0, base - bar, std::max(px(iv.hi()) - x0, 1.0), bar, "#1f77b4");
  }
  for (const auto& p : marks) {
    svg.rect(px(p.x()) - 3, base + 2, 6, 6, "#d62728");
  }
  svg.text(margin + pw, base + 22, "bar height: log2(1 + density)", 10, "end");
  return svg.finish();
}

}  // namespace smallball::report
