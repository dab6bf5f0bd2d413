#pragma once

#include <string>
#include <vector>

namespace interactionkit {

struct ChartSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> y_err;  // optional; same length as y when present
};

struct ChartSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  std::vector<ChartSeries> series;
};

/// Renders a self-contained SVG line chart: one polyline per series plus a
/// translucent +-error band, tick labels, and a legend. No external
/// references, so the file can be opened as-is.
std::string render_chart_svg(const ChartSpec& spec);

void write_chart_svg(const std::string& path, const ChartSpec& spec);

}  // namespace interactionkit
