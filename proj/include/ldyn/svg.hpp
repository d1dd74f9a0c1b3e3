#pragma once

// Minimal SVG plots: heatmap, scatter and histogram bars. Visual aids only.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <span>
#include <string>

namespace ldyn::svg {

namespace detail {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

inline void open(std::ostream& os, const std::string& title, const std::string& xlabel, const std::string& ylabel) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << title << "</text>\n"
     << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 10 << "\" text-anchor=\"middle\">" << xlabel
     << "</text>\n"
     << "<text x=\"16\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << kHeight / 2 << ")\">" << ylabel << "</text>\n";
}

inline void frame(std::ostream& os, double xlo, double xhi, double ylo, double yhi) {
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << kLeft << "\" y=\"" << kHeight - kBottom + 16 << "\" text-anchor=\"middle\">" << num(xlo)
     << "</text>\n<text x=\"" << kWidth - kRight << "\" y=\"" << kHeight - kBottom + 16
     << "\" text-anchor=\"middle\">" << num(xhi) << "</text>\n";
  os << "<text x=\"" << kLeft - 4 << "\" y=\"" << kHeight - kBottom << "\" text-anchor=\"end\">" << num(ylo)
     << "</text>\n<text x=\"" << kLeft - 4 << "\" y=\"" << kTop + 10 << "\" text-anchor=\"end\">" << num(yhi)
     << "</text>\n";
}

inline double span_or_one(double lo, double hi) { return hi > lo ? hi - lo : 1.0; }

// blue (negative) - white (zero) - red (positive)
inline std::string diverging(double v, double scale) {
  if (!std::isfinite(v)) return "#999999";
  const double t = std::clamp(v / scale, -1.0, 1.0);
  const int fade = static_cast<int>(255 * (1.0 - std::abs(t)));
  char buf[8];
  if (t < 0) std::snprintf(buf, sizeof buf, "#%02x%02xff", fade, fade);
  else std::snprintf(buf, sizeof buf, "#ff%02x%02x", fade, fade);
  return buf;
}

}  // namespace detail

/// values is row-major over (x_axis, y_axis); NaN marks missing cells.
inline void heatmap(std::ostream& os, std::span<const double> x_axis, std::span<const double> y_axis,
                    std::span<const double> values, const std::string& title, const std::string& xlabel,
                    const std::string& ylabel) {
  using namespace detail;
  open(os, title, xlabel, ylabel);
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  const double cw = pw / static_cast<double>(std::max<std::size_t>(1, x_axis.size()));
  const double ch = ph / static_cast<double>(std::max<std::size_t>(1, y_axis.size()));
  double scale = 0.0;
  for (double v : values)
    if (std::isfinite(v)) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) scale = 1.0;
  for (std::size_t i = 0; i < x_axis.size(); ++i) {
    for (std::size_t j = 0; j < y_axis.size(); ++j) {
      const double v = values[i * y_axis.size() + j];
      os << "<rect x=\"" << num(kLeft + cw * i) << "\" y=\"" << num(kTop + ph - ch * (j + 1)) << "\" width=\""
         << num(cw) << "\" height=\"" << num(ch) << "\" fill=\"" << diverging(v, scale) << "\"/>\n";
    }
  }
  if (!x_axis.empty() && !y_axis.empty()) frame(os, x_axis.front(), x_axis.back(), y_axis.front(), y_axis.back());
  os << "</svg>\n";
}

inline void scatter(std::ostream& os, std::span<const double> xs, std::span<const double> ys,
                    const std::string& title, const std::string& xlabel, const std::string& ylabel) {
  using namespace detail;
  open(os, title, xlabel, ylabel);
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo, ylo = xlo, yhi = -xlo;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xlo = std::min(xlo, xs[i]), xhi = std::max(xhi, xs[i]);
    ylo = std::min(ylo, ys[i]), yhi = std::max(yhi, ys[i]);
  }
  if (!xs.empty()) {
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    const double sx = pw / span_or_one(xlo, xhi), sy = ph / span_or_one(ylo, yhi);
    for (std::size_t i = 0; i < xs.size(); ++i)
      os << "<circle cx=\"" << num(kLeft + (xs[i] - xlo) * sx) << "\" cy=\"" << num(kTop + ph - (ys[i] - ylo) * sy)
         << "\" r=\"0.8\" fill=\"black\"/>\n";
    frame(os, xlo, xhi, ylo, yhi);
  }
  os << "</svg>\n";
}

inline void bars(std::ostream& os, std::span<const double> edges, std::span<const long> counts,
                 const std::string& title, const std::string& xlabel) {
  using namespace detail;
  open(os, title, xlabel, "count");
  if (!counts.empty()) {
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    const long top = std::max(1L, *std::max_element(counts.begin(), counts.end()));
    const double bw = pw / static_cast<double>(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
      const double h = ph * static_cast<double>(counts[i]) / static_cast<double>(top);
      os << "<rect x=\"" << num(kLeft + bw * i) << "\" y=\"" << num(kTop + ph - h) << "\" width=\"" << num(bw)
         << "\" height=\"" << num(h) << "\" fill=\"steelblue\" stroke=\"white\"/>\n";
    }
    frame(os, edges.front(), edges.back(), 0.0, static_cast<double>(top));
  }
  os << "</svg>\n";
}

}  // namespace ldyn::svg
