#include "interactionkit/svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace interactionkit {

namespace {

constexpr double kWidth = 760;
constexpr double kHeight = 480;
constexpr double kLeft = 80, kRight = 20, kTop = 40, kBottom = 60;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

std::string fmt_tick(double v) {
  std::ostringstream out;
  out.precision(4);
  out << v;
  return out.str();
}

}  // namespace

std::string render_chart_svg(const ChartSpec& spec) {
  double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
  double y_min = std::numeric_limits<double>::infinity(), y_max = -y_min;
  double y_min_pos = std::numeric_limits<double>::infinity();
  for (const auto& s : spec.series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double err = i < s.y_err.size() ? s.y_err[i] : 0.0;
      x_min = std::min(x_min, s.x[i]);
      x_max = std::max(x_max, s.x[i]);
      y_min = std::min(y_min, s.y[i] - err);
      y_max = std::max(y_max, s.y[i] + err);
      if (s.y[i] > 0.0) y_min_pos = std::min(y_min_pos, s.y[i]);
      if (s.y[i] - err > 0.0) y_min_pos = std::min(y_min_pos, s.y[i] - err);
    }
  }
  if (!std::isfinite(x_min) || !std::isfinite(y_min)) {
    throw std::invalid_argument("render_chart_svg: no data points");
  }
  if (x_max == x_min) x_max = x_min + 1.0;

  // Log charts clamp non-positive values to half a decade below the smallest
  // positive one; exact zeros (e.g. error at full budget) stay plottable.
  double ly_min = 0.0, ly_max = 1.0;
  if (spec.log_y) {
    if (!std::isfinite(y_min_pos)) y_min_pos = 1e-12;
    ly_min = std::floor(std::log10(y_min_pos)) - 0.5;
    ly_max = std::ceil(std::log10(std::max(y_max, y_min_pos * 10)));
  } else {
    if (y_max == y_min) y_max = y_min + 1.0;
    ly_min = y_min;
    ly_max = y_max;
  }

  const auto x_of = [&](double x) {
    return kLeft + (x - x_min) / (x_max - x_min) * (kWidth - kLeft - kRight);
  };
  const auto y_of = [&](double y) {
    double t;
    if (spec.log_y) {
      const double floor_v = std::pow(10.0, ly_min);
      t = (std::log10(std::max(y, floor_v)) - ly_min) / (ly_max - ly_min);
    } else {
      t = (y - ly_min) / (ly_max - ly_min);
    }
    return kHeight - kBottom - t * (kHeight - kTop - kBottom);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"16\">" << spec.title << "</text>\n";

  // Axes.
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\"" << kWidth - kRight
      << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kHeight - kBottom << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 16
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << spec.x_label
      << "</text>\n";
  svg << "<text x=\"20\" y=\"" << (kTop + kHeight - kBottom) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 20 "
      << (kTop + kHeight - kBottom) / 2 << ")\">" << spec.y_label << "</text>\n";

  // Ticks.
  if (spec.log_y) {
    for (int d = static_cast<int>(std::ceil(ly_min)); d <= static_cast<int>(ly_max); ++d) {
      const double y = y_of(std::pow(10.0, d));
      svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << y << "\" x2=\"" << kLeft << "\" y2=\"" << y
          << "\" stroke=\"black\"/>\n";
      svg << "<text x=\"" << kLeft - 9 << "\" y=\"" << y + 4
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">1e" << d
          << "</text>\n";
    }
  } else {
    for (int i = 0; i <= 5; ++i) {
      const double v = ly_min + (ly_max - ly_min) * i / 5.0;
      const double y = y_of(v);
      svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << y << "\" x2=\"" << kLeft << "\" y2=\"" << y
          << "\" stroke=\"black\"/>\n";
      svg << "<text x=\"" << kLeft - 9 << "\" y=\"" << y + 4
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt_tick(v)
          << "</text>\n";
    }
  }
  for (const auto& s : spec.series) {
    for (double xv : s.x) {
      const double x = x_of(xv);
      svg << "<line x1=\"" << x << "\" y1=\"" << kHeight - kBottom << "\" x2=\"" << x << "\" y2=\""
          << kHeight - kBottom + 5 << "\" stroke=\"black\"/>\n";
    }
    break;  // tick labels from the first series' grid only
  }
  if (!spec.series.empty()) {
    for (double xv : spec.series.front().x) {
      svg << "<text x=\"" << x_of(xv) << "\" y=\"" << kHeight - kBottom + 18
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << fmt_tick(xv)
          << "</text>\n";
    }
  }

  // Error bands then lines, so lines stay visible.
  for (std::size_t si = 0; si < spec.series.size(); ++si) {
    const auto& s = spec.series[si];
    const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
    if (s.y_err.size() == s.y.size() && !s.y.empty()) {
      std::ostringstream pts;
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        pts << fmt(x_of(s.x[i])) << "," << fmt(y_of(s.y[i] + s.y_err[i])) << " ";
      }
      for (std::size_t i = s.x.size(); i-- > 0;) {
        pts << fmt(x_of(s.x[i])) << "," << fmt(y_of(std::max(s.y[i] - s.y_err[i], 0.0))) << " ";
      }
      svg << "<polygon points=\"" << pts.str() << "\" fill=\"" << color
          << "\" fill-opacity=\"0.2\" stroke=\"none\"/>\n";
    }
  }
  for (std::size_t si = 0; si < spec.series.size(); ++si) {
    const auto& s = spec.series[si];
    const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::ostringstream pts;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      pts << fmt(x_of(s.x[i])) << "," << fmt(y_of(s.y[i])) << " ";
    }
    svg << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      svg << "<circle cx=\"" << fmt(x_of(s.x[i])) << "\" cy=\"" << fmt(y_of(s.y[i]))
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    // Legend entry.
    const double ly = kTop + 8 + 18 * static_cast<double>(si);
    svg << "<rect x=\"" << kWidth - 190 << "\" y=\"" << ly - 9
        << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n";
    svg << "<text x=\"" << kWidth - 172 << "\" y=\"" << ly + 2
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_chart_svg(const std::string& path, const ChartSpec& spec) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write SVG: " + path);
  out << render_chart_svg(spec);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace interactionkit
