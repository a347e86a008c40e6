#pragma once

#include <string>
#include <vector>

namespace volterra {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotBand {
  double lo = 0.0;
  double hi = 0.0;
};

// Static SVG line chart: horizontal bands (spectral gaps), one polyline per
// series, axes with min/0/max ticks, legend. Output is deterministic.
void write_line_chart(const std::string& path, const std::string& title,
                      const std::vector<PlotSeries>& series, const std::vector<PlotBand>& bands);

}  // namespace volterra
