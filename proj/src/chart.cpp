#include "nnoracle/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nno::chart {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 400;
constexpr int kMarginLeft = 56;
constexpr int kMarginRight = 140;  // legend space
constexpr int kMarginTop = 36;
constexpr int kMarginBottom = 48;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string svg_open() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n"
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string text(double x, double y, const std::string& s, const std::string& extra = "") {
  return "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" " + extra + ">" + s + "</text>\n";
}

std::string line(double x1, double y1, double x2, double y2, const std::string& stroke,
                 double width = 1.0) {
  return "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) + "\" y2=\"" +
         fmt(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) + "\"/>\n";
}

// y in [0,100] percent to pixel.
double py(double rate) {
  const double h = kHeight - kMarginTop - kMarginBottom;
  return kMarginTop + h * (1.0 - std::clamp(rate, 0.0, 100.0) / 100.0);
}

std::string y_axis(std::string& out) {
  const double x0 = kMarginLeft;
  out += line(x0, kMarginTop, x0, kHeight - kMarginBottom, "black");
  for (int v = 0; v <= 100; v += 20) {
    out += line(x0 - 4, py(v), x0, py(v), "black");
    out += text(x0 - 8, py(v) + 4, std::to_string(v), "text-anchor=\"end\"");
  }
  return out;
}

std::string legend(std::string& out, const std::vector<std::string>& names) {
  const double lx = kWidth - kMarginRight + 12;
  double ly = kMarginTop + 8;
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += line(lx, ly - 4, lx + 18, ly - 4, kPalette[i % 6], 2.0);
    out += text(lx + 24, ly, names[i]);
    ly += 16;
  }
  return out;
}

}  // namespace

std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::vector<Series>& series) {
  if (series.empty()) throw std::invalid_argument("chart: no series");
  double xmin = series[0].x.empty() ? 0 : series[0].x[0];
  double xmax = xmin;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) throw std::invalid_argument("chart: x/y size mismatch");
    for (double v : s.x) {
      xmin = std::min(xmin, v);
      xmax = std::max(xmax, v);
    }
  }
  if (xmax == xmin) xmax = xmin + 1;
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  auto px = [&](double v) { return kMarginLeft + plot_w * (v - xmin) / (xmax - xmin); };

  std::string out = svg_open();
  out += text(kMarginLeft, 20, title, "font-weight=\"bold\"");
  y_axis(out);
  out += line(kMarginLeft, kHeight - kMarginBottom, kWidth - kMarginRight,
              kHeight - kMarginBottom, "black");
  for (const auto& s : series)
    for (double v : s.x) {
      out += line(px(v), kHeight - kMarginBottom, px(v), kHeight - kMarginBottom + 4, "black");
      out += text(px(v) - 6, kHeight - kMarginBottom + 18, fmt(v));
    }
  out += text(kMarginLeft + plot_w / 2 - 20, kHeight - 12, x_label);

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    std::string pts;
    for (std::size_t k = 0; k < s.x.size(); ++k)
      pts += fmt(px(s.x[k])) + "," + fmt(py(s.y[k])) + " ";
    out += "<polyline fill=\"none\" stroke=\"" + std::string(kPalette[i % 6]) +
           "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
    for (std::size_t k = 0; k < s.x.size(); ++k)
      out += "<circle cx=\"" + fmt(px(s.x[k])) + "\" cy=\"" + fmt(py(s.y[k])) +
             "\" r=\"3\" fill=\"" + kPalette[i % 6] + "\"/>\n";
  }
  std::vector<std::string> names;
  for (const auto& s : series) names.push_back(s.name);
  legend(out, names);
  return out + "</svg>\n";
}

std::string bar_chart(const std::string& title, const std::vector<std::string>& group_labels,
                      const std::vector<BarSeries>& series) {
  if (series.empty() || group_labels.empty())
    throw std::invalid_argument("chart: empty bar chart");
  for (const auto& s : series) {
    if (s.values.size() != group_labels.size())
      throw std::invalid_argument("chart: bar value count mismatch");
    if (!s.sigmas.empty() && s.sigmas.size() != group_labels.size())
      throw std::invalid_argument("chart: sigma count mismatch");
  }
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double group_w = plot_w / static_cast<double>(group_labels.size());
  const double bar_w = group_w / (static_cast<double>(series.size()) + 1);

  std::string out = svg_open();
  out += text(kMarginLeft, 20, title, "font-weight=\"bold\"");
  y_axis(out);
  out += line(kMarginLeft, kHeight - kMarginBottom, kWidth - kMarginRight,
              kHeight - kMarginBottom, "black");
  for (std::size_t g = 0; g < group_labels.size(); ++g) {
    const double gx = kMarginLeft + group_w * (static_cast<double>(g) + 0.5);
    out += text(gx - 8, kHeight - kMarginBottom + 16, group_labels[g],
                "font-size=\"9\" transform=\"rotate(45 " + fmt(gx - 8) + " " +
                    fmt(kHeight - kMarginBottom + 16) + ")\"");
    for (std::size_t i = 0; i < series.size(); ++i) {
      const double v = std::clamp(series[i].values[g], 0.0, 100.0);
      const double x = gx + bar_w * (static_cast<double>(i) -
                                     static_cast<double>(series.size()) / 2.0);
      out += "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(py(v)) + "\" width=\"" + fmt(bar_w) +
             "\" height=\"" + fmt(py(0) - py(v)) + "\" fill=\"" + kPalette[i % 6] + "\"/>\n";
      if (!series[i].sigmas.empty()) {
        // error bar capped at the displayable [0,100] band
        const double lo = std::max(0.0, v - series[i].sigmas[g]);
        const double hi = std::min(100.0, v + series[i].sigmas[g]);
        const double cx = x + bar_w / 2;
        out += line(cx, py(lo), cx, py(hi), "black");
        out += line(cx - 3, py(lo), cx + 3, py(lo), "black");
        out += line(cx - 3, py(hi), cx + 3, py(hi), "black");
      }
    }
  }
  std::vector<std::string> names;
  for (const auto& s : series) names.push_back(s.name);
  legend(out, names);
  return out + "</svg>\n";
}

}  // namespace nno::chart
