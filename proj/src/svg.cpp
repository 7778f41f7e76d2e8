#include "flatzero/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <vector>

namespace flatzero {

namespace {

constexpr double kWidth = 800, kHeight = 520;
constexpr double kLeft = 70, kRight = 20, kTop = 30, kBottom = 50;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

}  // namespace

void write_chart_svg(std::ostream& out, const CsvTable& table, const ChartSpec& spec) {
  int xi = table.column_index(spec.x_column);
  int yi = table.column_index(spec.y_column);
  if (xi < 0) throw std::invalid_argument("write_chart_svg: missing column: " + spec.x_column);
  if (yi < 0) throw std::invalid_argument("write_chart_svg: missing column: " + spec.y_column);
  if (table.rows.empty()) throw std::invalid_argument("write_chart_svg: no data rows");

  int gi = table.column_index("radius_fraction");
  if (gi == xi || gi == yi) gi = -1;

  std::map<double, Series> groups;
  for (const auto& row : table.rows) {
    if (xi >= int(row.size()) || yi >= int(row.size())) continue;
    double x = row[xi], y = row[yi];
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    if (spec.log_scale_y) {
      if (!(y > 0.0)) continue;
      y = std::log10(y);
    }
    double key = gi >= 0 && gi < int(row.size()) ? row[gi] : 0.0;
    auto& series = groups[key];
    if (series.label.empty())
      series.label = gi >= 0 ? "radius_fraction=" + fmt(key) : spec.y_column;
    series.points.emplace_back(x, y);
  }
  if (groups.empty()) throw std::invalid_argument("write_chart_svg: no plottable samples");

  double x_min = INFINITY, x_max = -INFINITY, y_min = INFINITY, y_max = -INFINITY;
  for (auto& [key, s] : groups) {
    std::stable_sort(s.points.begin(), s.points.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [x, y] : s.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (x_min == x_max) {
    x_min -= 1.0;
    x_max += 1.0;
  }
  if (y_min == y_max) {
    y_min -= 1.0;
    y_max += 1.0;
  }

  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * (kWidth - kLeft - kRight); };
  auto py = [&](double y) { return kHeight - kBottom - (y - y_min) / (y_max - y_min) * (kHeight - kTop - kBottom); };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

  // axes
  out << "  <line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\"" << kWidth - kRight << "\" y2=\""
      << kHeight - kBottom << "\" stroke=\"black\"/>\n"
      << "  <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kHeight - kBottom
      << "\" stroke=\"black\"/>\n";

  for (int t = 0; t <= 5; ++t) {
    double fx = x_min + (x_max - x_min) * t / 5.0;
    double fy = y_min + (y_max - y_min) * t / 5.0;
    out << "  <line x1=\"" << px(fx) << "\" y1=\"" << kHeight - kBottom << "\" x2=\"" << px(fx) << "\" y2=\""
        << kHeight - kBottom + 5 << "\" stroke=\"black\"/>\n"
        << "  <text x=\"" << px(fx) << "\" y=\"" << kHeight - kBottom + 20
        << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt(fx) << "</text>\n"
        << "  <line x1=\"" << kLeft - 5 << "\" y1=\"" << py(fy) << "\" x2=\"" << kLeft << "\" y2=\"" << py(fy)
        << "\" stroke=\"black\"/>\n"
        << "  <text x=\"" << kLeft - 8 << "\" y=\"" << py(fy) + 4 << "\" font-size=\"11\" text-anchor=\"end\">"
        << fmt(fy) << "</text>\n";
  }

  std::string y_label = spec.log_scale_y ? "log10(" + spec.y_column + ")" : spec.y_column;
  out << "  <text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 12
      << "\" font-size=\"13\" text-anchor=\"middle\">" << spec.x_column << "</text>\n"
      << "  <text x=\"18\" y=\"" << (kTop + kHeight - kBottom) / 2 << "\" font-size=\"13\" text-anchor=\"middle\""
      << " transform=\"rotate(-90 18 " << (kTop + kHeight - kBottom) / 2 << ")\">" << y_label << "</text>\n";

  int color = 0;
  double legend_y = kTop + 6;
  for (const auto& [key, s] : groups) {
    const char* stroke = kPalette[color % 6];
    out << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : s.points) out << fmt(px(x)) << ',' << fmt(py(y)) << ' ';
    out << "\"/>\n";
    if (groups.size() > 1) {
      out << "  <line x1=\"" << kWidth - kRight - 150 << "\" y1=\"" << legend_y << "\" x2=\"" << kWidth - kRight - 130
          << "\" y2=\"" << legend_y << "\" stroke=\"" << stroke << "\" stroke-width=\"1.5\"/>\n"
          << "  <text x=\"" << kWidth - kRight - 125 << "\" y=\"" << legend_y + 4 << "\" font-size=\"11\">" << s.label
          << "</text>\n";
      legend_y += 16;
    }
    ++color;
  }
  out << "</svg>\n";
}

}  // namespace flatzero
