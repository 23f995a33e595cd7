#pragma once

#include <string>
#include <vector>

namespace nno::chart {

// Minimal self-contained SVG 1.1 output, enough for rate-vs-parameter lines
// and per-mutant bars. CSV files remain the authoritative data; these charts
// are a convenience view.

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

// Line chart of rate (%) against a numeric parameter; the y-axis spans
// [0, 100].
std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::vector<Series>& series);

struct BarSeries {
  std::string name;
  std::vector<double> values;  // one per group
  std::vector<double> sigmas;  // optional error bars; empty or one per group
};

// Grouped bars (one group per label) with optional +-sigma error bars,
// clamped to [0, 100] for display.
std::string bar_chart(const std::string& title, const std::vector<std::string>& group_labels,
                      const std::vector<BarSeries>& series);

}  // namespace nno::chart
