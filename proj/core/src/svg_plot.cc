// Copyright 2026 The corrqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "corrqaoa/svg_plot.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <tuple>

namespace corrqaoa {
namespace {

constexpr double kPanelW = 420, kPanelH = 300, kMargin = 55;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                   "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

void panel(std::ostringstream& out, double x0, const std::string& xlabel, const std::vector<Series>& series,
           bool log_x) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto tx = [&](double x) { return log_x ? std::log10(x) : x; };
  for (const Series& s : series) {
    for (const auto& [x, y] : s.points) {
      xmin = std::min(xmin, tx(x));
      xmax = std::max(xmax, tx(x));
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xmin > xmax) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (xmax - xmin < 1e-12) xmin -= 0.5, xmax += 0.5;
  if (ymax - ymin < 1e-12) ymin -= 0.005, ymax += 0.005;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad, ymax += pad;
  const double left = x0 + kMargin, right = x0 + kPanelW - 10, top = 20, bottom = kPanelH - kMargin + 20;
  auto px = [&](double x) { return left + (tx(x) - xmin) / (xmax - xmin) * (right - left); };
  auto py = [&](double y) { return bottom - (y - ymin) / (ymax - ymin) * (bottom - top); };
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << right - left << "\" height=\""
      << bottom - top << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 4.0;
    const double fy = ymin + (ymax - ymin) * i / 4.0;
    const double sx = left + (right - left) * i / 4.0;
    const double sy = bottom - (bottom - top) * i / 4.0;
    out << "<text x=\"" << sx << "\" y=\"" << bottom + 15 << "\" font-size=\"10\" text-anchor=\"middle\">"
        << num(log_x ? std::pow(10.0, fx) : fx) << "</text>\n";
    out << "<text x=\"" << left - 4 << "\" y=\"" << sy + 3 << "\" font-size=\"10\" text-anchor=\"end\">"
        << num(fy) << "</text>\n";
  }
  out << "<text x=\"" << (left + right) / 2 << "\" y=\"" << bottom + 32
      << "\" font-size=\"12\" text-anchor=\"middle\">" << xlabel << "</text>\n";
  out << "<text x=\"" << x0 + 12 << "\" y=\"" << (top + bottom) / 2 << "\" font-size=\"12\" transform=\"rotate(-90 "
      << x0 + 12 << ' ' << (top + bottom) / 2 << ")\" text-anchor=\"middle\">AR</text>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % std::size(kColors)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (const auto& [x, y] : series[i].points) out << px(x) << ',' << py(y) << ' ';
    out << "\"/>\n";
    for (const auto& [x, y] : series[i].points) {
      out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    }
    out << "<text x=\"" << right - 4 << "\" y=\"" << top + 14 + 13 * static_cast<double>(i)
        << "\" font-size=\"10\" text-anchor=\"end\" fill=\"" << color << "\">" << series[i].label << "</text>\n";
  }
}

}  // namespace

std::string render_svg(const std::vector<ExperimentRecord>& records) {
  std::map<std::tuple<std::string, std::string, double>, Series> vs_p, vs_kappa;
  bool positive_p = true;
  for (const ExperimentRecord& r : records) {
    if (!r.error.empty() || !std::isfinite(r.ar) || r.model == NoiseMode::kNone) continue;
    const std::string model(to_string(r.model));
    const std::string tag = records.front().instance == r.instance ? "" : r.instance + " ";
    Series& a = vs_p[{r.instance, model, r.kappa}];
    a.label = tag + model + " kappa=" + num(r.kappa);
    a.points.emplace_back(r.p, r.ar);
    Series& b = vs_kappa[{r.instance, model, r.p}];
    b.label = tag + model + " p=" + num(r.p);
    b.points.emplace_back(r.kappa, r.ar);
    positive_p = positive_p && r.p > 0.0;
  }
  auto collect = [](std::map<std::tuple<std::string, std::string, double>, Series>& m) {
    std::vector<Series> out;
    for (auto& [key, s] : m) {
      std::sort(s.points.begin(), s.points.end());
      out.push_back(std::move(s));
    }
    return out;
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * kPanelW << "\" height=\"" << kPanelH + 30
      << "\" font-family=\"sans-serif\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  panel(out, 0, "p", collect(vs_p), positive_p);
  panel(out, kPanelW, "kappa", collect(vs_kappa), false);
  out << "</svg>\n";
  return out.str();
}

}  // namespace corrqaoa
