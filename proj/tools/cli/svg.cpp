#include "cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "cli/csv.hpp"

namespace fovir::cli {

namespace {

constexpr std::array<const char*, 4> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
constexpr std::array<const char*, 4> kPanelNames{"T", "I", "V", "C"};
constexpr std::size_t kMaxPoints = 800;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

void write_suite_svg(std::ostream& os, const TrajectorySuite& suite, double alpha) {
  constexpr double panel_w = 420, panel_h = 260, margin = 50;
  const double width = 2 * panel_w + 3 * margin;
  const double height = 2 * panel_h + 3 * margin + 30;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << margin << "\" y=\"24\" font-size=\"15\">alpha = " << format_double(alpha)
     << "</text>\n";

  std::vector<const SuiteRun*> runs;
  for (const auto& run : suite.runs) {
    if (run.alpha == alpha) runs.push_back(&run);
  }

  for (std::size_t panel = 0; panel < 4; ++panel) {
    const double x0 = margin + static_cast<double>(panel % 2) * (panel_w + margin);
    const double y0 = 40 + margin + static_cast<double>(panel / 2) * (panel_h + margin);
    double vmax = 0.0;
    double tmax = 0.0;
    for (const auto* run : runs) {
      for (const auto& s : run->trajectory.states) vmax = std::max(vmax, s[panel]);
      if (!run->trajectory.times.empty()) tmax = std::max(tmax, run->trajectory.times.back());
    }
    if (vmax <= 0.0) vmax = 1.0;
    if (tmax <= 0.0) tmax = 1.0;

    os << "<g>\n<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << panel_w
       << "\" height=\"" << panel_h << "\" fill=\"none\" stroke=\"#444\"/>\n";
    os << "<text x=\"" << x0 + 6 << "\" y=\"" << y0 + 16 << "\">" << kPanelNames[panel]
       << "</text>\n";
    os << "<text x=\"" << x0 << "\" y=\"" << y0 - 4 << "\" font-size=\"10\">max "
       << format_double(vmax) << "</text>\n";
    os << "<text x=\"" << x0 + panel_w - 40 << "\" y=\"" << y0 + panel_h + 14
       << "\" font-size=\"10\">t = " << format_double(tmax) << "</text>\n";

    for (const auto* run : runs) {
      const auto& tr = run->trajectory;
      const std::size_t stride = std::max<std::size_t>(1, tr.size() / kMaxPoints);
      os << "<polyline fill=\"none\" stroke-width=\"1.3\" stroke=\""
         << kPalette[static_cast<std::size_t>(run->kind)] << "\" points=\"";
      for (std::size_t n = 0; n < tr.size(); n += stride) {
        const double px = x0 + tr.times[n] / tmax * panel_w;
        const double py = y0 + panel_h - tr.states[n][panel] / vmax * panel_h;
        os << fmt(px) << ',' << fmt(py) << ' ';
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
  }

  for (std::size_t i = 0; i < runs.size(); ++i) {
    const double lx = margin + static_cast<double>(i) * 90;
    const double ly = height - 14;
    os << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 20 << "\" y2=\""
       << ly - 4 << "\" stroke-width=\"2\" stroke=\""
       << kPalette[static_cast<std::size_t>(runs[i]->kind)] << "\"/>\n";
    os << "<text x=\"" << lx + 26 << "\" y=\"" << ly << "\">" << kind_name(runs[i]->kind)
       << "</text>\n";
  }
  os << "</svg>\n";
}

void write_heatmap_svg(std::ostream& os, const SweepGrid& grid) {
  constexpr double size = 500, margin = 60;
  const double cw = size / static_cast<double>(grid.cols());
  const double ch = size / static_cast<double>(grid.rows());
  double lo = INFINITY;
  double hi = -INFINITY;
  for (double v : grid.values) {
    if (v > 0.0) {
      lo = std::min(lo, std::log10(v));
      hi = std::max(hi, std::log10(v));
    }
  }
  if (!(hi > lo)) hi = lo + 1.0;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * margin
     << "\" height=\"" << size + 2 * margin << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t iy = 0; iy < grid.rows(); ++iy) {
    for (std::size_t ix = 0; ix < grid.cols(); ++ix) {
      const double v = grid.at(ix, iy);
      const double s = v > 0.0 ? (std::log10(v) - lo) / (hi - lo) : 0.0;
      int r, g, b;
      if (v < 1.0) {
        const int grey = 120 + static_cast<int>(100 * s);
        r = g = b = grey;
      } else {
        r = static_cast<int>(255 * s);
        g = static_cast<int>(80 + 100 * (1 - std::abs(2 * s - 1)));
        b = static_cast<int>(255 * (1 - s));
      }
      os << "<rect x=\"" << fmt(margin + static_cast<double>(ix) * cw) << "\" y=\""
         << fmt(margin + size - static_cast<double>(iy + 1) * ch) << "\" width=\"" << fmt(cw + 0.5)
         << "\" height=\"" << fmt(ch + 0.5) << "\" fill=\"rgb(" << r << ',' << g << ',' << b
         << ")\"/>\n";
    }
  }
  os << "<text x=\"" << margin + size / 2 << "\" y=\"" << margin + size + 30 << "\">"
     << grid.x.name() << "</text>\n";
  os << "<text x=\"14\" y=\"" << margin + size / 2 << "\">" << grid.y.name() << "</text>\n";
  os << "<text x=\"" << margin << "\" y=\"30\">log10 R0 in [" << fmt(lo) << ", " << fmt(hi)
     << "]</text>\n";
  os << "</svg>\n";
}

}  // namespace fovir::cli
