#include "volterra/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "volterra/errors.hpp"
#include "volterra/numeric.hpp"

namespace volterra {

namespace {

constexpr int kWidth = 860;
constexpr int kHeight = 520;
constexpr int kLeft = 70, kRight = 30, kTop = 46, kBottom = 52;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#17becf", "#e377c2", "#7f7f7f", "#bcbd22"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

void write_line_chart(const std::string& path, const std::string& title,
                      const std::vector<PlotSeries>& series,
                      const std::vector<PlotBand>& bands) {
  if (series.empty()) throw input_error("nothing to plot");

  double xmin = series[0].x.front(), xmax = xmin, ymin = series[0].y.front(), ymax = ymin;
  for (const PlotSeries& s : series) {
    if (s.x.size() != s.y.size() || s.x.empty()) throw input_error("malformed plot series");
    for (double v : s.x) xmin = std::min(xmin, v), xmax = std::max(xmax, v);
    for (double v : s.y) ymin = std::min(ymin, v), ymax = std::max(ymax, v);
  }
  for (const PlotBand& b : bands) {
    ymin = std::min(ymin, b.lo);
    ymax = std::max(ymax, b.hi);
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  const double ypad = (ymax - ymin) == 0.0 ? 1.0 : 0.06 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open output file: " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" font-family=\"monospace\" font-size=\"15\""
      << " text-anchor=\"middle\">" << title << "</text>\n";

  for (const PlotBand& b : bands) {
    const double y0 = py(b.hi), y1 = py(b.lo);
    out << "<rect x=\"" << kLeft << "\" y=\"" << num(y0) << "\" width=\"" << num(pw)
        << "\" height=\"" << num(std::max(1.0, y1 - y0))
        << "\" fill=\"#d0e2f4\" opacity=\"0.7\"/>\n";
  }

  // Axes with min / zero / max ticks.
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << num(pw)
      << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"#333\"/>\n";
  auto ytick = [&](double y) {
    out << "<line x1=\"" << kLeft - 4 << "\" y1=\"" << num(py(y)) << "\" x2=\"" << kLeft
        << "\" y2=\"" << num(py(y)) << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(py(y) + 4)
        << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" << num(y)
        << "</text>\n";
  };
  ytick(ymin + ypad);
  ytick(ymax - ypad);
  if (ymin < 0.0 && ymax > 0.0) ytick(0.0);
  auto xtick = [&](double x) {
    out << "<text x=\"" << num(px(x)) << "\" y=\"" << kHeight - kBottom + 18
        << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" << num(x)
        << "</text>\n";
  };
  xtick(xmin);
  xtick(0.5 * (xmin + xmax));
  xtick(xmax);

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % (sizeof kPalette / sizeof *kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.4\" points=\"";
    for (std::size_t p = 0; p < series[i].x.size(); ++p)
      out << num(px(series[i].x[p])) << ',' << num(py(series[i].y[p])) << ' ';
    out << "\"/>\n";
    out << "<text x=\"" << kWidth - kRight - 8 << "\" y=\"" << kTop + 16 + 14 * i
        << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\" fill=\"" << color
        << "\">" << series[i].label << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace volterra
